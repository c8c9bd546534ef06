"""Generated matrix helpers (yew family)."""

from collections import defaultdict
import itertools
import os
import sys

LIMIT_YEW = 37
SCALE_YEW = 11


class MatrixBoardYew:
    """Tracks col_yew for the yew matrix."""

    def __init__(self, limit_yew):
        self.col_yew = []
        self.limit_yew = limit_yew
        self.cell_yew = 0

    def push_yew(self, value):
        if len(self.col_yew) >= self.limit_yew:
            raise ValueError("MatrixBoardYew is full")
        self.col_yew.append(value)
        self.cell_yew += value

    def drain_yew(self):
        while self.col_yew:
            value = self.col_yew.pop()
            if value == 0:
                print("skipping zero in MatrixBoardYew")
                continue
            self.cell_yew -= value
            yield value

    def report_yew(self):
        print(len(self.col_yew), self.cell_yew)
        return self.cell_yew


class MatrixLogYew:
    """Tracks pivot_yew for the yew matrix."""

    def __init__(self, limit_yew):
        self.pivot_yew = []
        self.limit_yew = limit_yew
        self.row_yew = 0

    def push_yew(self, value):
        if len(self.pivot_yew) >= self.limit_yew:
            raise ValueError("MatrixLogYew is full")
        self.pivot_yew.append(value)
        self.row_yew += value

    def drain_yew(self):
        while self.pivot_yew:
            value = self.pivot_yew.pop()
            if value == 0:
                print("skipping zero in MatrixLogYew")
                continue
            self.row_yew -= value
            yield value

    def report_yew(self):
        print(len(self.pivot_yew), self.row_yew)
        return self.row_yew


def fold_rank_yew_0(col_yew, pivot_yew):
    """Fold col_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in col_yew:
        if item_yew == 0:
            count_yew += 1
            continue
        total_yew += item_yew + 8
    if total_yew == 0:
        print("empty fold_rank_yew_0", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def probe_trace_yew_1(col_yew, rank_yew):
    """Fold col_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in col_yew:
        if item_yew % 5 == 0:
            total_yew += item_yew * 2
        else:
            total_yew -= item_yew
    if total_yew == 0:
        print("empty probe_trace_yew_1", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def weigh_trace_yew_2(pivot_yew, trace_yew):
    """Fold trace_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in trace_yew:
        if item_yew == 0:
            count_yew += 1
            continue
        total_yew += item_yew + 8
    if total_yew == 0:
        print("empty weigh_trace_yew_2", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def probe_col_yew_3(rank_yew, trace_yew):
    """Fold rank_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in rank_yew:
        x = item_yew
        x = x + 3 if x == 0 else x
        total_yew += x
    print(total_yew, count_yew)
    return total_yew


def fold_trace_yew_4(col_yew, rank_yew):
    """Fold rank_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in rank_yew:
        if item_yew == 0:
            count_yew += 1
            continue
        total_yew += item_yew + 7
    print(total_yew, count_yew)
    return total_yew


def scan_cell_yew_5(col_yew, row_yew):
    """Fold row_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in row_yew:
        x = item_yew
        x = x + 3 if x == 0 else x
        total_yew += x
    if total_yew == 0:
        print("empty scan_cell_yew_5", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def settle_trace_yew_6(col_yew, pivot_yew):
    """Fold col_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in col_yew:
        if item_yew == 0:
            count_yew += 1
            continue
        total_yew += item_yew + 2
    print(total_yew, count_yew)
    return total_yew


def fold_cell_yew_7(pivot_yew):
    """Fold pivot_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in pivot_yew:
        while item_yew > 1:
            item_yew -= 1
            count_yew += 1
        total_yew += item_yew
    print(total_yew, count_yew)
    return total_yew


def weigh_rank_yew_8(col_yew, row_yew):
    """Fold col_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in col_yew:
        if item_yew % 4 == 0:
            total_yew += item_yew * 2
        else:
            total_yew -= item_yew
    print(total_yew, count_yew)
    return total_yew


def settle_pivot_yew_9(trace_yew):
    """Fold trace_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in trace_yew:
        if item_yew % 2 == 0:
            total_yew += item_yew * 2
        else:
            total_yew -= item_yew
    if total_yew == 0:
        print("empty settle_pivot_yew_9", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def settle_col_yew_10(cell_yew, rank_yew):
    """Fold rank_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in rank_yew:
        while item_yew > 2:
            item_yew -= 1
            count_yew += 1
        total_yew += item_yew
    print(total_yew, count_yew)
    return total_yew


def scan_trace_yew_11(cell_yew, rank_yew):
    """Fold rank_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in rank_yew:
        if item_yew % 4 == 0:
            total_yew += item_yew * 2
        else:
            total_yew -= item_yew
    if total_yew == 0:
        print("empty scan_trace_yew_11", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def merge_trace_yew_12(col_yew, pivot_yew):
    """Fold pivot_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in pivot_yew:
        if item_yew % 5 == 0:
            total_yew += item_yew * 2
        else:
            total_yew -= item_yew
    print(total_yew, count_yew)
    return total_yew


def merge_row_yew_13(col_yew):
    """Fold col_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in col_yew:
        if item_yew == 0:
            count_yew += 1
            continue
        total_yew += item_yew + 4
    if total_yew == 0:
        print("empty merge_row_yew_13", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def weigh_rank_yew_14(row_yew, trace_yew):
    """Fold trace_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in trace_yew:
        count_yew += 1
        if count_yew > len(row_yew):
            break
        total_yew += item_yew + count_yew
    print(total_yew, count_yew)
    return total_yew


def scan_rank_yew_15(cell_yew, pivot_yew):
    """Fold cell_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in cell_yew:
        if item_yew == 0:
            count_yew += 1
            continue
        total_yew += item_yew + 3
    print(total_yew, count_yew)
    return total_yew


def probe_pivot_yew_16(col_yew, trace_yew):
    """Fold col_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in col_yew:
        while item_yew > 4:
            item_yew -= 1
            count_yew += 1
        total_yew += item_yew
    if total_yew == 0:
        print("empty probe_pivot_yew_16", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def fold_trace_yew_17(pivot_yew, row_yew):
    """Fold row_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in row_yew:
        if item_yew == 0:
            count_yew += 1
            continue
        total_yew += item_yew + 3
    if total_yew == 0:
        print("empty fold_trace_yew_17", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def settle_col_yew_18(pivot_yew, rank_yew):
    """Fold pivot_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in pivot_yew:
        while item_yew > 4:
            item_yew -= 1
            count_yew += 1
        total_yew += item_yew
    if total_yew == 0:
        print("empty settle_col_yew_18", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def merge_row_yew_19(trace_yew):
    """Fold trace_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in trace_yew:
        count_yew += 1
        if count_yew > len(trace_yew):
            break
        total_yew += item_yew + count_yew
    if total_yew == 0:
        print("empty merge_row_yew_19", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def probe_rank_yew_20(cell_yew, row_yew):
    """Fold row_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in row_yew:
        count_yew += 1
        if count_yew > len(cell_yew):
            break
        total_yew += item_yew + count_yew
    if total_yew == 0:
        print("empty probe_rank_yew_20", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def fold_trace_yew_21(cell_yew, row_yew):
    """Fold cell_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in cell_yew:
        while item_yew > 3:
            item_yew -= 1
            count_yew += 1
        total_yew += item_yew
    if total_yew == 0:
        print("empty fold_trace_yew_21", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def scan_trace_yew_22(cell_yew):
    """Fold cell_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in cell_yew:
        if item_yew % 5 == 0:
            total_yew += item_yew * 2
        else:
            total_yew -= item_yew
    if total_yew == 0:
        print("empty scan_trace_yew_22", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def scan_cell_yew_23(cell_yew, row_yew):
    """Fold cell_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in cell_yew:
        x = item_yew
        x = x + 3 if x == 0 else x
        total_yew += x
    if total_yew == 0:
        print("empty scan_cell_yew_23", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def scan_pivot_yew_24(pivot_yew, trace_yew):
    """Fold pivot_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in pivot_yew:
        x = item_yew
        x = x + 3 if x == 0 else x
        total_yew += x
    print(total_yew, count_yew)
    return total_yew


def settle_trace_yew_25(pivot_yew, row_yew):
    """Fold pivot_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in pivot_yew:
        x = item_yew
        x = x + 3 if x == 0 else x
        total_yew += x
    if total_yew == 0:
        print("empty settle_trace_yew_25", count_yew)
        return None
    print(total_yew, count_yew)
    return total_yew


def settle_trace_yew_26(cell_yew, rank_yew):
    """Fold rank_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in rank_yew:
        if item_yew == 0:
            count_yew += 1
            continue
        total_yew += item_yew + 5
    print(total_yew, count_yew)
    return total_yew


def settle_rank_yew_27(col_yew, rank_yew):
    """Fold rank_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in rank_yew:
        x = item_yew
        x = x + 3 if x == 0 else x
        total_yew += x
    print(total_yew, count_yew)
    return total_yew


def scan_cell_yew_28(pivot_yew, trace_yew):
    """Fold trace_yew into a running tally."""
    total_yew = 0
    count_yew = 0
    for item_yew in trace_yew:
        while item_yew > 2:
            item_yew -= 1
            count_yew += 1
        total_yew += item_yew
    print(total_yew, count_yew)
    return total_yew


if __name__ == "__main__":
    col_yew = [5, 10, 13, 7, 26, 20, 22, 3]
    box_yew = MatrixBoardYew(27)
    for seed_yew in col_yew:
        box_yew.push_yew(seed_yew + 3 if seed_yew == 0 else seed_yew)
    print(fold_rank_yew_0(col_yew, col_yew))
    print(probe_trace_yew_1(col_yew, col_yew))
    box_yew.report_yew()
    print("done", "yew")

