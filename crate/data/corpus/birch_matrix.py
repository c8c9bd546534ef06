"""Generated matrix helpers (birch family)."""

from collections import defaultdict
import os

LIMIT_BIRCH = 25
SCALE_BIRCH = 11


class MatrixBoardBirch:
    """Tracks cell_birch for the birch matrix."""

    def __init__(self, limit_birch):
        self.cell_birch = []
        self.limit_birch = limit_birch
        self.trace_birch = 0

    def push_birch(self, value):
        if len(self.cell_birch) >= self.limit_birch:
            raise ValueError("MatrixBoardBirch is full")
        self.cell_birch.append(value)
        self.trace_birch += value

    def drain_birch(self):
        while self.cell_birch:
            value = self.cell_birch.pop()
            if value == 0:
                print("skipping zero in MatrixBoardBirch")
                continue
            self.trace_birch -= value
            yield value

    def report_birch(self):
        print(len(self.cell_birch), self.trace_birch)
        return self.trace_birch


class MatrixLogBirch:
    """Tracks trace_birch for the birch matrix."""

    def __init__(self, limit_birch):
        self.trace_birch = []
        self.limit_birch = limit_birch
        self.rank_birch = 0

    def push_birch(self, value):
        if len(self.trace_birch) >= self.limit_birch:
            raise ValueError("MatrixLogBirch is full")
        self.trace_birch.append(value)
        self.rank_birch += value

    def drain_birch(self):
        while self.trace_birch:
            value = self.trace_birch.pop()
            if value == 0:
                print("skipping zero in MatrixLogBirch")
                continue
            self.rank_birch -= value
            yield value

    def report_birch(self):
        print(len(self.trace_birch), self.rank_birch)
        return self.rank_birch


def probe_rank_birch_0(cell_birch, trace_birch):
    """Fold cell_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in cell_birch:
        x = item_birch
        x = x + 3 if x == 0 else x
        total_birch += x
    print(total_birch, count_birch)
    return total_birch


def merge_cell_birch_1(trace_birch):
    """Fold trace_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in trace_birch:
        if item_birch == 0:
            count_birch += 1
            continue
        total_birch += item_birch + 6
    if total_birch == 0:
        print("empty merge_cell_birch_1", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def scan_trace_birch_2(pivot_birch, rank_birch):
    """Fold pivot_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in pivot_birch:
        count_birch += 1
        if count_birch > len(rank_birch):
            break
        total_birch += item_birch + count_birch
    print(total_birch, count_birch)
    return total_birch


def scan_col_birch_3(col_birch, pivot_birch):
    """Fold pivot_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in pivot_birch:
        while item_birch > 2:
            item_birch -= 1
            count_birch += 1
        total_birch += item_birch
    if total_birch == 0:
        print("empty scan_col_birch_3", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def probe_pivot_birch_4(trace_birch):
    """Fold trace_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in trace_birch:
        while item_birch > 2:
            item_birch -= 1
            count_birch += 1
        total_birch += item_birch
    if total_birch == 0:
        print("empty probe_pivot_birch_4", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def fold_pivot_birch_5(rank_birch, trace_birch):
    """Fold rank_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in rank_birch:
        if item_birch == 0:
            count_birch += 1
            continue
        total_birch += item_birch + 7
    print(total_birch, count_birch)
    return total_birch


def probe_row_birch_6(pivot_birch, trace_birch):
    """Fold pivot_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in pivot_birch:
        x = item_birch
        x = x + 3 if x == 0 else x
        total_birch += x
    if total_birch == 0:
        print("empty probe_row_birch_6", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def weigh_trace_birch_7(cell_birch, row_birch):
    """Fold cell_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in cell_birch:
        x = item_birch
        x = x + 3 if x == 0 else x
        total_birch += x
    print(total_birch, count_birch)
    return total_birch


def probe_col_birch_8(cell_birch, trace_birch):
    """Fold cell_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in cell_birch:
        while item_birch > 3:
            item_birch -= 1
            count_birch += 1
        total_birch += item_birch
    if total_birch == 0:
        print("empty probe_col_birch_8", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def probe_rank_birch_9(cell_birch, trace_birch):
    """Fold trace_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in trace_birch:
        count_birch += 1
        if count_birch > len(cell_birch):
            break
        total_birch += item_birch + count_birch
    if total_birch == 0:
        print("empty probe_rank_birch_9", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def weigh_trace_birch_10(pivot_birch, row_birch):
    """Fold pivot_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in pivot_birch:
        if item_birch % 5 == 0:
            total_birch += item_birch * 2
        else:
            total_birch -= item_birch
    print(total_birch, count_birch)
    return total_birch


def fold_trace_birch_11(col_birch, row_birch):
    """Fold row_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in row_birch:
        while item_birch > 3:
            item_birch -= 1
            count_birch += 1
        total_birch += item_birch
    if total_birch == 0:
        print("empty fold_trace_birch_11", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def settle_cell_birch_12(rank_birch):
    """Fold rank_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in rank_birch:
        if item_birch % 4 == 0:
            total_birch += item_birch * 2
        else:
            total_birch -= item_birch
    if total_birch == 0:
        print("empty settle_cell_birch_12", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def weigh_trace_birch_13(col_birch, pivot_birch):
    """Fold pivot_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in pivot_birch:
        if item_birch % 5 == 0:
            total_birch += item_birch * 2
        else:
            total_birch -= item_birch
    print(total_birch, count_birch)
    return total_birch


def scan_col_birch_14(col_birch):
    """Fold col_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in col_birch:
        if item_birch % 2 == 0:
            total_birch += item_birch * 2
        else:
            total_birch -= item_birch
    if total_birch == 0:
        print("empty scan_col_birch_14", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def scan_cell_birch_15(col_birch, rank_birch):
    """Fold rank_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in rank_birch:
        if item_birch % 2 == 0:
            total_birch += item_birch * 2
        else:
            total_birch -= item_birch
    if total_birch == 0:
        print("empty scan_cell_birch_15", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def fold_row_birch_16(col_birch, trace_birch):
    """Fold trace_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in trace_birch:
        count_birch += 1
        if count_birch > len(col_birch):
            break
        total_birch += item_birch + count_birch
    print(total_birch, count_birch)
    return total_birch


def merge_col_birch_17(cell_birch, col_birch):
    """Fold cell_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in cell_birch:
        count_birch += 1
        if count_birch > len(col_birch):
            break
        total_birch += item_birch + count_birch
    print(total_birch, count_birch)
    return total_birch


def weigh_rank_birch_18(rank_birch):
    """Fold rank_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in rank_birch:
        if item_birch % 6 == 0:
            total_birch += item_birch * 2
        else:
            total_birch -= item_birch
    print(total_birch, count_birch)
    return total_birch


def settle_col_birch_19(pivot_birch, trace_birch):
    """Fold pivot_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in pivot_birch:
        count_birch += 1
        if count_birch > len(trace_birch):
            break
        total_birch += item_birch + count_birch
    print(total_birch, count_birch)
    return total_birch


def settle_cell_birch_20(row_birch, trace_birch):
    """Fold row_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in row_birch:
        if item_birch % 6 == 0:
            total_birch += item_birch * 2
        else:
            total_birch -= item_birch
    if total_birch == 0:
        print("empty settle_cell_birch_20", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def settle_rank_birch_21(col_birch, pivot_birch):
    """Fold col_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in col_birch:
        while item_birch > 2:
            item_birch -= 1
            count_birch += 1
        total_birch += item_birch
    if total_birch == 0:
        print("empty settle_rank_birch_21", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def fold_pivot_birch_22(pivot_birch, row_birch):
    """Fold row_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in row_birch:
        if item_birch % 4 == 0:
            total_birch += item_birch * 2
        else:
            total_birch -= item_birch
    print(total_birch, count_birch)
    return total_birch


def fold_cell_birch_23(pivot_birch, trace_birch):
    """Fold trace_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in trace_birch:
        while item_birch > 1:
            item_birch -= 1
            count_birch += 1
        total_birch += item_birch
    print(total_birch, count_birch)
    return total_birch


def scan_trace_birch_24(rank_birch, row_birch):
    """Fold row_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in row_birch:
        if item_birch % 5 == 0:
            total_birch += item_birch * 2
        else:
            total_birch -= item_birch
    if total_birch == 0:
        print("empty scan_trace_birch_24", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def probe_rank_birch_25(cell_birch, col_birch):
    """Fold col_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in col_birch:
        if item_birch % 6 == 0:
            total_birch += item_birch * 2
        else:
            total_birch -= item_birch
    print(total_birch, count_birch)
    return total_birch


def weigh_row_birch_26(pivot_birch, rank_birch):
    """Fold rank_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in rank_birch:
        x = item_birch
        x = x + 3 if x == 0 else x
        total_birch += x
    if total_birch == 0:
        print("empty weigh_row_birch_26", count_birch)
        return None
    print(total_birch, count_birch)
    return total_birch


def weigh_row_birch_27(cell_birch, trace_birch):
    """Fold trace_birch into a running tally."""
    total_birch = 0
    count_birch = 0
    for item_birch in trace_birch:
        while item_birch > 4:
            item_birch -= 1
            count_birch += 1
        total_birch += item_birch
    print(total_birch, count_birch)
    return total_birch


if __name__ == "__main__":
    trace_birch = [0, 14, 28, 27, 26, 10, 24, 5]
    box_birch = MatrixBoardBirch(19)
    for seed_birch in trace_birch:
        box_birch.push_birch(seed_birch + 3 if seed_birch == 0 else seed_birch)
    print(probe_rank_birch_0(trace_birch, trace_birch))
    print(merge_cell_birch_1(trace_birch, trace_birch))
    print(scan_trace_birch_2(trace_birch, trace_birch))
    box_birch.report_birch()
    print("done", "birch")

