"""Generated matrix helpers (wharf family)."""

from collections import deque
import json
import os
import sys

LIMIT_WHARF = 90
SCALE_WHARF = 2


class MatrixBoardWharf:
    """Tracks cell_wharf for the wharf matrix."""

    def __init__(self, limit_wharf):
        self.cell_wharf = []
        self.limit_wharf = limit_wharf
        self.row_wharf = 0

    def push_wharf(self, value):
        if len(self.cell_wharf) >= self.limit_wharf:
            raise ValueError("MatrixBoardWharf is full")
        self.cell_wharf.append(value)
        self.row_wharf += value

    def drain_wharf(self):
        while self.cell_wharf:
            value = self.cell_wharf.pop()
            if value == 0:
                print("skipping zero in MatrixBoardWharf")
                continue
            self.row_wharf -= value
            yield value

    def report_wharf(self):
        print(len(self.cell_wharf), self.row_wharf)
        return self.row_wharf


class MatrixLogWharf:
    """Tracks cell_wharf for the wharf matrix."""

    def __init__(self, limit_wharf):
        self.cell_wharf = []
        self.limit_wharf = limit_wharf
        self.rank_wharf = 0

    def push_wharf(self, value):
        if len(self.cell_wharf) >= self.limit_wharf:
            raise ValueError("MatrixLogWharf is full")
        self.cell_wharf.append(value)
        self.rank_wharf += value

    def drain_wharf(self):
        while self.cell_wharf:
            value = self.cell_wharf.pop()
            if value == 0:
                print("skipping zero in MatrixLogWharf")
                continue
            self.rank_wharf -= value
            yield value

    def report_wharf(self):
        print(len(self.cell_wharf), self.rank_wharf)
        return self.rank_wharf


def merge_trace_wharf_0(cell_wharf, rank_wharf):
    """Fold cell_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in cell_wharf:
        x = item_wharf
        x = x + 3 if x == 0 else x
        total_wharf += x
    print(total_wharf, count_wharf)
    return total_wharf


def scan_pivot_wharf_1(pivot_wharf, rank_wharf):
    """Fold rank_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in rank_wharf:
        while item_wharf > 1:
            item_wharf -= 1
            count_wharf += 1
        total_wharf += item_wharf
    if total_wharf == 0:
        print("empty scan_pivot_wharf_1", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def weigh_trace_wharf_2(cell_wharf, rank_wharf):
    """Fold cell_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in cell_wharf:
        if item_wharf == 0:
            count_wharf += 1
            continue
        total_wharf += item_wharf + 4
    if total_wharf == 0:
        print("empty weigh_trace_wharf_2", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def scan_trace_wharf_3(col_wharf, row_wharf):
    """Fold row_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in row_wharf:
        while item_wharf > 1:
            item_wharf -= 1
            count_wharf += 1
        total_wharf += item_wharf
    print(total_wharf, count_wharf)
    return total_wharf


def settle_row_wharf_4(cell_wharf, rank_wharf):
    """Fold cell_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in cell_wharf:
        x = item_wharf
        x = x + 3 if x == 0 else x
        total_wharf += x
    print(total_wharf, count_wharf)
    return total_wharf


def fold_col_wharf_5(rank_wharf, trace_wharf):
    """Fold trace_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in trace_wharf:
        if item_wharf % 2 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    print(total_wharf, count_wharf)
    return total_wharf


def merge_col_wharf_6(rank_wharf, trace_wharf):
    """Fold rank_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in rank_wharf:
        if item_wharf % 4 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    print(total_wharf, count_wharf)
    return total_wharf


def weigh_trace_wharf_7(col_wharf, pivot_wharf):
    """Fold col_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in col_wharf:
        if item_wharf % 4 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    print(total_wharf, count_wharf)
    return total_wharf


def fold_cell_wharf_8(cell_wharf):
    """Fold cell_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in cell_wharf:
        if item_wharf % 4 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    if total_wharf == 0:
        print("empty fold_cell_wharf_8", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def scan_trace_wharf_9(rank_wharf, row_wharf):
    """Fold row_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in row_wharf:
        x = item_wharf
        x = x + 3 if x == 0 else x
        total_wharf += x
    print(total_wharf, count_wharf)
    return total_wharf


def probe_pivot_wharf_10(rank_wharf, trace_wharf):
    """Fold rank_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in rank_wharf:
        if item_wharf % 5 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    if total_wharf == 0:
        print("empty probe_pivot_wharf_10", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def scan_cell_wharf_11(col_wharf, row_wharf):
    """Fold col_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in col_wharf:
        if item_wharf % 6 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    if total_wharf == 0:
        print("empty scan_cell_wharf_11", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def weigh_col_wharf_12(cell_wharf, trace_wharf):
    """Fold cell_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in cell_wharf:
        while item_wharf > 1:
            item_wharf -= 1
            count_wharf += 1
        total_wharf += item_wharf
    if total_wharf == 0:
        print("empty weigh_col_wharf_12", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def fold_cell_wharf_13(rank_wharf, trace_wharf):
    """Fold rank_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in rank_wharf:
        count_wharf += 1
        if count_wharf > len(trace_wharf):
            break
        total_wharf += item_wharf + count_wharf
    print(total_wharf, count_wharf)
    return total_wharf


def merge_col_wharf_14(cell_wharf, pivot_wharf):
    """Fold pivot_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in pivot_wharf:
        if item_wharf % 5 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    if total_wharf == 0:
        print("empty merge_col_wharf_14", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def fold_pivot_wharf_15(col_wharf, pivot_wharf):
    """Fold col_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in col_wharf:
        count_wharf += 1
        if count_wharf > len(pivot_wharf):
            break
        total_wharf += item_wharf + count_wharf
    print(total_wharf, count_wharf)
    return total_wharf


def settle_cell_wharf_16(rank_wharf, trace_wharf):
    """Fold trace_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in trace_wharf:
        if item_wharf == 0:
            count_wharf += 1
            continue
        total_wharf += item_wharf + 6
    print(total_wharf, count_wharf)
    return total_wharf


def fold_trace_wharf_17(cell_wharf, rank_wharf):
    """Fold cell_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in cell_wharf:
        if item_wharf % 2 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    if total_wharf == 0:
        print("empty fold_trace_wharf_17", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def fold_rank_wharf_18(pivot_wharf, trace_wharf):
    """Fold pivot_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in pivot_wharf:
        x = item_wharf
        x = x + 3 if x == 0 else x
        total_wharf += x
    print(total_wharf, count_wharf)
    return total_wharf


def probe_col_wharf_19(rank_wharf, row_wharf):
    """Fold rank_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in rank_wharf:
        count_wharf += 1
        if count_wharf > len(row_wharf):
            break
        total_wharf += item_wharf + count_wharf
    if total_wharf == 0:
        print("empty probe_col_wharf_19", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def weigh_col_wharf_20(col_wharf, pivot_wharf):
    """Fold pivot_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in pivot_wharf:
        x = item_wharf
        x = x + 3 if x == 0 else x
        total_wharf += x
    print(total_wharf, count_wharf)
    return total_wharf


def scan_cell_wharf_21(cell_wharf, col_wharf):
    """Fold cell_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in cell_wharf:
        x = item_wharf
        x = x + 3 if x == 0 else x
        total_wharf += x
    print(total_wharf, count_wharf)
    return total_wharf


def fold_trace_wharf_22(col_wharf, rank_wharf):
    """Fold rank_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in rank_wharf:
        if item_wharf == 0:
            count_wharf += 1
            continue
        total_wharf += item_wharf + 4
    print(total_wharf, count_wharf)
    return total_wharf


def settle_rank_wharf_23(col_wharf, row_wharf):
    """Fold col_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in col_wharf:
        x = item_wharf
        x = x + 3 if x == 0 else x
        total_wharf += x
    print(total_wharf, count_wharf)
    return total_wharf


def scan_cell_wharf_24(pivot_wharf):
    """Fold pivot_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in pivot_wharf:
        while item_wharf > 4:
            item_wharf -= 1
            count_wharf += 1
        total_wharf += item_wharf
    print(total_wharf, count_wharf)
    return total_wharf


def scan_pivot_wharf_25(col_wharf, rank_wharf):
    """Fold rank_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in rank_wharf:
        if item_wharf % 4 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    print(total_wharf, count_wharf)
    return total_wharf


def fold_rank_wharf_26(cell_wharf, rank_wharf):
    """Fold rank_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in rank_wharf:
        if item_wharf % 6 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    print(total_wharf, count_wharf)
    return total_wharf


def settle_cell_wharf_27(cell_wharf, trace_wharf):
    """Fold cell_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in cell_wharf:
        if item_wharf == 0:
            count_wharf += 1
            continue
        total_wharf += item_wharf + 8
    if total_wharf == 0:
        print("empty settle_cell_wharf_27", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def weigh_rank_wharf_28(cell_wharf, pivot_wharf):
    """Fold pivot_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in pivot_wharf:
        if item_wharf % 6 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    print(total_wharf, count_wharf)
    return total_wharf


def probe_trace_wharf_29(pivot_wharf, rank_wharf):
    """Fold rank_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in rank_wharf:
        if item_wharf % 2 == 0:
            total_wharf += item_wharf * 2
        else:
            total_wharf -= item_wharf
    if total_wharf == 0:
        print("empty probe_trace_wharf_29", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def merge_col_wharf_30(cell_wharf, trace_wharf):
    """Fold trace_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in trace_wharf:
        if item_wharf == 0:
            count_wharf += 1
            continue
        total_wharf += item_wharf + 3
    if total_wharf == 0:
        print("empty merge_col_wharf_30", count_wharf)
        return None
    print(total_wharf, count_wharf)
    return total_wharf


def probe_cell_wharf_31(pivot_wharf, trace_wharf):
    """Fold pivot_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in pivot_wharf:
        if item_wharf == 0:
            count_wharf += 1
            continue
        total_wharf += item_wharf + 3
    print(total_wharf, count_wharf)
    return total_wharf


def fold_row_wharf_32(col_wharf, pivot_wharf):
    """Fold col_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in col_wharf:
        count_wharf += 1
        if count_wharf > len(pivot_wharf):
            break
        total_wharf += item_wharf + count_wharf
    print(total_wharf, count_wharf)
    return total_wharf


def fold_row_wharf_33(col_wharf):
    """Fold col_wharf into a running tally."""
    total_wharf = 0
    count_wharf = 0
    for item_wharf in col_wharf:
        while item_wharf > 1:
            item_wharf -= 1
            count_wharf += 1
        total_wharf += item_wharf
    print(total_wharf, count_wharf)
    return total_wharf


if __name__ == "__main__":
    col_wharf = [14, 19, 4, 8, 17, 13, 3, 10]
    box_wharf = MatrixBoardWharf(22)
    for seed_wharf in col_wharf:
        box_wharf.push_wharf(seed_wharf + 3 if seed_wharf == 0 else seed_wharf)
    print(merge_trace_wharf_0(col_wharf, col_wharf))
    print(scan_pivot_wharf_1(col_wharf, col_wharf))
    box_wharf.report_wharf()
    print("done", "wharf")

