"""Generated matrix helpers (knoll family)."""

from collections import defaultdict
from collections import deque
import math
import sys

LIMIT_KNOLL = 59
SCALE_KNOLL = 5


class MatrixBoardKnoll:
    """Tracks pivot_knoll for the knoll matrix."""

    def __init__(self, limit_knoll):
        self.pivot_knoll = []
        self.limit_knoll = limit_knoll
        self.rank_knoll = 0

    def push_knoll(self, value):
        if len(self.pivot_knoll) >= self.limit_knoll:
            raise ValueError("MatrixBoardKnoll is full")
        self.pivot_knoll.append(value)
        self.rank_knoll += value

    def drain_knoll(self):
        while self.pivot_knoll:
            value = self.pivot_knoll.pop()
            if value == 0:
                print("skipping zero in MatrixBoardKnoll")
                continue
            self.rank_knoll -= value
            yield value

    def report_knoll(self):
        print(len(self.pivot_knoll), self.rank_knoll)
        return self.rank_knoll


class MatrixLogKnoll:
    """Tracks row_knoll for the knoll matrix."""

    def __init__(self, limit_knoll):
        self.row_knoll = []
        self.limit_knoll = limit_knoll
        self.cell_knoll = 0

    def push_knoll(self, value):
        if len(self.row_knoll) >= self.limit_knoll:
            raise ValueError("MatrixLogKnoll is full")
        self.row_knoll.append(value)
        self.cell_knoll += value

    def drain_knoll(self):
        while self.row_knoll:
            value = self.row_knoll.pop()
            if value == 0:
                print("skipping zero in MatrixLogKnoll")
                continue
            self.cell_knoll -= value
            yield value

    def report_knoll(self):
        print(len(self.row_knoll), self.cell_knoll)
        return self.cell_knoll


def fold_trace_knoll_0(col_knoll, pivot_knoll):
    """Fold pivot_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in pivot_knoll:
        x = item_knoll
        x = x + 3 if x == 0 else x
        total_knoll += x
    print(total_knoll, count_knoll)
    return total_knoll


def probe_cell_knoll_1(cell_knoll, col_knoll):
    """Fold col_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in col_knoll:
        while item_knoll > 4:
            item_knoll -= 1
            count_knoll += 1
        total_knoll += item_knoll
    if total_knoll == 0:
        print("empty probe_cell_knoll_1", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def fold_rank_knoll_2(pivot_knoll, rank_knoll):
    """Fold pivot_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in pivot_knoll:
        while item_knoll > 2:
            item_knoll -= 1
            count_knoll += 1
        total_knoll += item_knoll
    if total_knoll == 0:
        print("empty fold_rank_knoll_2", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def fold_cell_knoll_3(col_knoll, row_knoll):
    """Fold row_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in row_knoll:
        if item_knoll % 4 == 0:
            total_knoll += item_knoll * 2
        else:
            total_knoll -= item_knoll
    print(total_knoll, count_knoll)
    return total_knoll


def settle_row_knoll_4(cell_knoll, trace_knoll):
    """Fold trace_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in trace_knoll:
        count_knoll += 1
        if count_knoll > len(cell_knoll):
            break
        total_knoll += item_knoll + count_knoll
    print(total_knoll, count_knoll)
    return total_knoll


def settle_row_knoll_5(pivot_knoll, rank_knoll):
    """Fold pivot_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in pivot_knoll:
        if item_knoll == 0:
            count_knoll += 1
            continue
        total_knoll += item_knoll + 6
    print(total_knoll, count_knoll)
    return total_knoll


def scan_rank_knoll_6(cell_knoll, pivot_knoll):
    """Fold pivot_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in pivot_knoll:
        if item_knoll % 2 == 0:
            total_knoll += item_knoll * 2
        else:
            total_knoll -= item_knoll
    if total_knoll == 0:
        print("empty scan_rank_knoll_6", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def weigh_pivot_knoll_7(row_knoll):
    """Fold row_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in row_knoll:
        while item_knoll > 2:
            item_knoll -= 1
            count_knoll += 1
        total_knoll += item_knoll
    print(total_knoll, count_knoll)
    return total_knoll


def fold_trace_knoll_8(pivot_knoll, row_knoll):
    """Fold pivot_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in pivot_knoll:
        count_knoll += 1
        if count_knoll > len(row_knoll):
            break
        total_knoll += item_knoll + count_knoll
    if total_knoll == 0:
        print("empty fold_trace_knoll_8", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def weigh_row_knoll_9(rank_knoll):
    """Fold rank_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in rank_knoll:
        x = item_knoll
        x = x + 3 if x == 0 else x
        total_knoll += x
    if total_knoll == 0:
        print("empty weigh_row_knoll_9", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def probe_rank_knoll_10(rank_knoll, trace_knoll):
    """Fold rank_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in rank_knoll:
        if item_knoll % 5 == 0:
            total_knoll += item_knoll * 2
        else:
            total_knoll -= item_knoll
    print(total_knoll, count_knoll)
    return total_knoll


def probe_rank_knoll_11(rank_knoll, trace_knoll):
    """Fold rank_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in rank_knoll:
        while item_knoll > 2:
            item_knoll -= 1
            count_knoll += 1
        total_knoll += item_knoll
    print(total_knoll, count_knoll)
    return total_knoll


def scan_col_knoll_12(rank_knoll, row_knoll):
    """Fold row_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in row_knoll:
        if item_knoll == 0:
            count_knoll += 1
            continue
        total_knoll += item_knoll + 3
    print(total_knoll, count_knoll)
    return total_knoll


def fold_cell_knoll_13(rank_knoll, row_knoll):
    """Fold rank_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in rank_knoll:
        if item_knoll % 6 == 0:
            total_knoll += item_knoll * 2
        else:
            total_knoll -= item_knoll
    if total_knoll == 0:
        print("empty fold_cell_knoll_13", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def weigh_rank_knoll_14(col_knoll, row_knoll):
    """Fold col_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in col_knoll:
        if item_knoll == 0:
            count_knoll += 1
            continue
        total_knoll += item_knoll + 8
    if total_knoll == 0:
        print("empty weigh_rank_knoll_14", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def probe_cell_knoll_15(row_knoll):
    """Fold row_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in row_knoll:
        x = item_knoll
        x = x + 3 if x == 0 else x
        total_knoll += x
    print(total_knoll, count_knoll)
    return total_knoll


def merge_trace_knoll_16(row_knoll):
    """Fold row_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in row_knoll:
        if item_knoll % 5 == 0:
            total_knoll += item_knoll * 2
        else:
            total_knoll -= item_knoll
    print(total_knoll, count_knoll)
    return total_knoll


def scan_col_knoll_17(row_knoll, trace_knoll):
    """Fold trace_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in trace_knoll:
        if item_knoll % 2 == 0:
            total_knoll += item_knoll * 2
        else:
            total_knoll -= item_knoll
    if total_knoll == 0:
        print("empty scan_col_knoll_17", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def weigh_pivot_knoll_18(cell_knoll, rank_knoll):
    """Fold rank_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in rank_knoll:
        if item_knoll % 5 == 0:
            total_knoll += item_knoll * 2
        else:
            total_knoll -= item_knoll
    if total_knoll == 0:
        print("empty weigh_pivot_knoll_18", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def fold_row_knoll_19(rank_knoll, trace_knoll):
    """Fold trace_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in trace_knoll:
        x = item_knoll
        x = x + 3 if x == 0 else x
        total_knoll += x
    print(total_knoll, count_knoll)
    return total_knoll


def probe_col_knoll_20(pivot_knoll, rank_knoll):
    """Fold rank_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in rank_knoll:
        while item_knoll > 4:
            item_knoll -= 1
            count_knoll += 1
        total_knoll += item_knoll
    print(total_knoll, count_knoll)
    return total_knoll


def weigh_col_knoll_21(cell_knoll, rank_knoll):
    """Fold rank_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in rank_knoll:
        count_knoll += 1
        if count_knoll > len(cell_knoll):
            break
        total_knoll += item_knoll + count_knoll
    print(total_knoll, count_knoll)
    return total_knoll


def probe_rank_knoll_22(col_knoll, row_knoll):
    """Fold row_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in row_knoll:
        if item_knoll % 6 == 0:
            total_knoll += item_knoll * 2
        else:
            total_knoll -= item_knoll
    print(total_knoll, count_knoll)
    return total_knoll


def weigh_row_knoll_23(row_knoll):
    """Fold row_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in row_knoll:
        if item_knoll == 0:
            count_knoll += 1
            continue
        total_knoll += item_knoll + 5
    if total_knoll == 0:
        print("empty weigh_row_knoll_23", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def fold_row_knoll_24(cell_knoll, pivot_knoll):
    """Fold cell_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in cell_knoll:
        count_knoll += 1
        if count_knoll > len(pivot_knoll):
            break
        total_knoll += item_knoll + count_knoll
    if total_knoll == 0:
        print("empty fold_row_knoll_24", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def merge_rank_knoll_25(col_knoll, pivot_knoll):
    """Fold col_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in col_knoll:
        while item_knoll > 3:
            item_knoll -= 1
            count_knoll += 1
        total_knoll += item_knoll
    if total_knoll == 0:
        print("empty merge_rank_knoll_25", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def weigh_row_knoll_26(rank_knoll, row_knoll):
    """Fold rank_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in rank_knoll:
        if item_knoll == 0:
            count_knoll += 1
            continue
        total_knoll += item_knoll + 8
    if total_knoll == 0:
        print("empty weigh_row_knoll_26", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def weigh_trace_knoll_27(cell_knoll, row_knoll):
    """Fold cell_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in cell_knoll:
        if item_knoll % 3 == 0:
            total_knoll += item_knoll * 2
        else:
            total_knoll -= item_knoll
    if total_knoll == 0:
        print("empty weigh_trace_knoll_27", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


def probe_col_knoll_28(pivot_knoll, rank_knoll):
    """Fold pivot_knoll into a running tally."""
    total_knoll = 0
    count_knoll = 0
    for item_knoll in pivot_knoll:
        while item_knoll > 1:
            item_knoll -= 1
            count_knoll += 1
        total_knoll += item_knoll
    if total_knoll == 0:
        print("empty probe_col_knoll_28", count_knoll)
        return None
    print(total_knoll, count_knoll)
    return total_knoll


if __name__ == "__main__":
    pivot_knoll = [17, 12, 27, 18, 29, 13, 11, 15]
    box_knoll = MatrixBoardKnoll(17)
    for seed_knoll in pivot_knoll:
        box_knoll.push_knoll(seed_knoll + 3 if seed_knoll == 0 else seed_knoll)
    print(fold_trace_knoll_0(pivot_knoll, pivot_knoll))
    print(probe_cell_knoll_1(pivot_knoll, pivot_knoll))
    print(fold_rank_knoll_2(pivot_knoll, pivot_knoll))
    box_knoll.report_knoll()
    print("done", "knoll")

