"""Generated matrix helpers (nectar family)."""

from collections import deque
import itertools
import os

LIMIT_NECTAR = 127
SCALE_NECTAR = 3


class MatrixBoardNectar:
    """Tracks pivot_nectar for the nectar matrix."""

    def __init__(self, limit_nectar):
        self.pivot_nectar = []
        self.limit_nectar = limit_nectar
        self.row_nectar = 0

    def push_nectar(self, value):
        if len(self.pivot_nectar) >= self.limit_nectar:
            raise ValueError("MatrixBoardNectar is full")
        self.pivot_nectar.append(value)
        self.row_nectar += value

    def drain_nectar(self):
        while self.pivot_nectar:
            value = self.pivot_nectar.pop()
            if value == 0:
                print("skipping zero in MatrixBoardNectar")
                continue
            self.row_nectar -= value
            yield value

    def report_nectar(self):
        print(len(self.pivot_nectar), self.row_nectar)
        return self.row_nectar


class MatrixLogNectar:
    """Tracks cell_nectar for the nectar matrix."""

    def __init__(self, limit_nectar):
        self.cell_nectar = []
        self.limit_nectar = limit_nectar
        self.col_nectar = 0

    def push_nectar(self, value):
        if len(self.cell_nectar) >= self.limit_nectar:
            raise ValueError("MatrixLogNectar is full")
        self.cell_nectar.append(value)
        self.col_nectar += value

    def drain_nectar(self):
        while self.cell_nectar:
            value = self.cell_nectar.pop()
            if value == 0:
                print("skipping zero in MatrixLogNectar")
                continue
            self.col_nectar -= value
            yield value

    def report_nectar(self):
        print(len(self.cell_nectar), self.col_nectar)
        return self.col_nectar


def settle_trace_nectar_0(trace_nectar):
    """Fold trace_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in trace_nectar:
        count_nectar += 1
        if count_nectar > len(trace_nectar):
            break
        total_nectar += item_nectar + count_nectar
    if total_nectar == 0:
        print("empty settle_trace_nectar_0", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def merge_pivot_nectar_1(row_nectar, trace_nectar):
    """Fold row_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in row_nectar:
        if item_nectar == 0:
            count_nectar += 1
            continue
        total_nectar += item_nectar + 5
    print(total_nectar, count_nectar)
    return total_nectar


def merge_pivot_nectar_2(col_nectar):
    """Fold col_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in col_nectar:
        x = item_nectar
        x = x + 3 if x == 0 else x
        total_nectar += x
    print(total_nectar, count_nectar)
    return total_nectar


def merge_row_nectar_3(cell_nectar, rank_nectar):
    """Fold rank_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in rank_nectar:
        if item_nectar % 2 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    print(total_nectar, count_nectar)
    return total_nectar


def scan_cell_nectar_4(rank_nectar, trace_nectar):
    """Fold rank_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in rank_nectar:
        while item_nectar > 3:
            item_nectar -= 1
            count_nectar += 1
        total_nectar += item_nectar
    print(total_nectar, count_nectar)
    return total_nectar


def probe_row_nectar_5(cell_nectar, row_nectar):
    """Fold row_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in row_nectar:
        if item_nectar % 2 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    if total_nectar == 0:
        print("empty probe_row_nectar_5", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def fold_cell_nectar_6(pivot_nectar, row_nectar):
    """Fold row_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in row_nectar:
        if item_nectar % 3 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    print(total_nectar, count_nectar)
    return total_nectar


def probe_cell_nectar_7(cell_nectar, row_nectar):
    """Fold row_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in row_nectar:
        if item_nectar % 5 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    print(total_nectar, count_nectar)
    return total_nectar


def scan_row_nectar_8(cell_nectar, col_nectar):
    """Fold col_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in col_nectar:
        count_nectar += 1
        if count_nectar > len(cell_nectar):
            break
        total_nectar += item_nectar + count_nectar
    print(total_nectar, count_nectar)
    return total_nectar


def merge_cell_nectar_9(col_nectar, pivot_nectar):
    """Fold col_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in col_nectar:
        x = item_nectar
        x = x + 3 if x == 0 else x
        total_nectar += x
    if total_nectar == 0:
        print("empty merge_cell_nectar_9", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def weigh_row_nectar_10(col_nectar, pivot_nectar):
    """Fold col_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in col_nectar:
        if item_nectar == 0:
            count_nectar += 1
            continue
        total_nectar += item_nectar + 4
    print(total_nectar, count_nectar)
    return total_nectar


def weigh_trace_nectar_11(rank_nectar):
    """Fold rank_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in rank_nectar:
        while item_nectar > 1:
            item_nectar -= 1
            count_nectar += 1
        total_nectar += item_nectar
    print(total_nectar, count_nectar)
    return total_nectar


def weigh_col_nectar_12(cell_nectar):
    """Fold cell_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in cell_nectar:
        if item_nectar % 5 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    print(total_nectar, count_nectar)
    return total_nectar


def fold_col_nectar_13(row_nectar, trace_nectar):
    """Fold row_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in row_nectar:
        x = item_nectar
        x = x + 3 if x == 0 else x
        total_nectar += x
    print(total_nectar, count_nectar)
    return total_nectar


def scan_row_nectar_14(row_nectar, trace_nectar):
    """Fold trace_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in trace_nectar:
        while item_nectar > 1:
            item_nectar -= 1
            count_nectar += 1
        total_nectar += item_nectar
    if total_nectar == 0:
        print("empty scan_row_nectar_14", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def scan_rank_nectar_15(cell_nectar, trace_nectar):
    """Fold cell_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in cell_nectar:
        count_nectar += 1
        if count_nectar > len(trace_nectar):
            break
        total_nectar += item_nectar + count_nectar
    if total_nectar == 0:
        print("empty scan_rank_nectar_15", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def merge_trace_nectar_16(cell_nectar, row_nectar):
    """Fold cell_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in cell_nectar:
        if item_nectar == 0:
            count_nectar += 1
            continue
        total_nectar += item_nectar + 8
    if total_nectar == 0:
        print("empty merge_trace_nectar_16", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def weigh_pivot_nectar_17(col_nectar, row_nectar):
    """Fold row_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in row_nectar:
        if item_nectar % 6 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    print(total_nectar, count_nectar)
    return total_nectar


def merge_pivot_nectar_18(trace_nectar):
    """Fold trace_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in trace_nectar:
        x = item_nectar
        x = x + 3 if x == 0 else x
        total_nectar += x
    if total_nectar == 0:
        print("empty merge_pivot_nectar_18", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def scan_pivot_nectar_19(cell_nectar):
    """Fold cell_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in cell_nectar:
        if item_nectar % 3 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    print(total_nectar, count_nectar)
    return total_nectar


def scan_col_nectar_20(cell_nectar, rank_nectar):
    """Fold rank_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in rank_nectar:
        x = item_nectar
        x = x + 3 if x == 0 else x
        total_nectar += x
    print(total_nectar, count_nectar)
    return total_nectar


def weigh_rank_nectar_21(cell_nectar, rank_nectar):
    """Fold cell_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in cell_nectar:
        if item_nectar % 2 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    if total_nectar == 0:
        print("empty weigh_rank_nectar_21", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def fold_pivot_nectar_22(cell_nectar, pivot_nectar):
    """Fold cell_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in cell_nectar:
        x = item_nectar
        x = x + 3 if x == 0 else x
        total_nectar += x
    if total_nectar == 0:
        print("empty fold_pivot_nectar_22", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def merge_cell_nectar_23(cell_nectar, row_nectar):
    """Fold row_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in row_nectar:
        if item_nectar == 0:
            count_nectar += 1
            continue
        total_nectar += item_nectar + 2
    print(total_nectar, count_nectar)
    return total_nectar


def scan_pivot_nectar_24(cell_nectar, row_nectar):
    """Fold cell_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in cell_nectar:
        if item_nectar % 2 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    if total_nectar == 0:
        print("empty scan_pivot_nectar_24", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def scan_trace_nectar_25(cell_nectar, row_nectar):
    """Fold cell_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in cell_nectar:
        x = item_nectar
        x = x + 3 if x == 0 else x
        total_nectar += x
    if total_nectar == 0:
        print("empty scan_trace_nectar_25", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def weigh_pivot_nectar_26(rank_nectar, trace_nectar):
    """Fold rank_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in rank_nectar:
        x = item_nectar
        x = x + 3 if x == 0 else x
        total_nectar += x
    if total_nectar == 0:
        print("empty weigh_pivot_nectar_26", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def probe_row_nectar_27(pivot_nectar, trace_nectar):
    """Fold trace_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in trace_nectar:
        if item_nectar % 6 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    if total_nectar == 0:
        print("empty probe_row_nectar_27", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def weigh_rank_nectar_28(col_nectar, trace_nectar):
    """Fold col_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in col_nectar:
        if item_nectar % 2 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    print(total_nectar, count_nectar)
    return total_nectar


def fold_rank_nectar_29(cell_nectar):
    """Fold cell_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in cell_nectar:
        if item_nectar == 0:
            count_nectar += 1
            continue
        total_nectar += item_nectar + 3
    print(total_nectar, count_nectar)
    return total_nectar


def merge_rank_nectar_30(col_nectar, row_nectar):
    """Fold row_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in row_nectar:
        if item_nectar % 5 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    if total_nectar == 0:
        print("empty merge_rank_nectar_30", count_nectar)
        return None
    print(total_nectar, count_nectar)
    return total_nectar


def settle_pivot_nectar_31(col_nectar, row_nectar):
    """Fold row_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in row_nectar:
        count_nectar += 1
        if count_nectar > len(col_nectar):
            break
        total_nectar += item_nectar + count_nectar
    print(total_nectar, count_nectar)
    return total_nectar


def fold_col_nectar_32(col_nectar, pivot_nectar):
    """Fold col_nectar into a running tally."""
    total_nectar = 0
    count_nectar = 0
    for item_nectar in col_nectar:
        if item_nectar % 6 == 0:
            total_nectar += item_nectar * 2
        else:
            total_nectar -= item_nectar
    print(total_nectar, count_nectar)
    return total_nectar


if __name__ == "__main__":
    trace_nectar = [26, 28, 29, 4, 10, 7, 12, 15]
    box_nectar = MatrixBoardNectar(14)
    for seed_nectar in trace_nectar:
        box_nectar.push_nectar(seed_nectar + 3 if seed_nectar == 0 else seed_nectar)
    print(settle_trace_nectar_0(trace_nectar, trace_nectar))
    print(merge_pivot_nectar_1(trace_nectar, trace_nectar))
    box_nectar.report_nectar()
    print("done", "nectar")

