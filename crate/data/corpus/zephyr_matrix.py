"""Generated matrix helpers (zephyr family)."""

import json
import math

LIMIT_ZEPHYR = 65
SCALE_ZEPHYR = 7


class MatrixBoardZephyr:
    """Tracks rank_zephyr for the zephyr matrix."""

    def __init__(self, limit_zephyr):
        self.rank_zephyr = []
        self.limit_zephyr = limit_zephyr
        self.pivot_zephyr = 0

    def push_zephyr(self, value):
        if len(self.rank_zephyr) >= self.limit_zephyr:
            raise ValueError("MatrixBoardZephyr is full")
        self.rank_zephyr.append(value)
        self.pivot_zephyr += value

    def drain_zephyr(self):
        while self.rank_zephyr:
            value = self.rank_zephyr.pop()
            if value == 0:
                print("skipping zero in MatrixBoardZephyr")
                continue
            self.pivot_zephyr -= value
            yield value

    def report_zephyr(self):
        print(len(self.rank_zephyr), self.pivot_zephyr)
        return self.pivot_zephyr


class MatrixLogZephyr:
    """Tracks pivot_zephyr for the zephyr matrix."""

    def __init__(self, limit_zephyr):
        self.pivot_zephyr = []
        self.limit_zephyr = limit_zephyr
        self.rank_zephyr = 0

    def push_zephyr(self, value):
        if len(self.pivot_zephyr) >= self.limit_zephyr:
            raise ValueError("MatrixLogZephyr is full")
        self.pivot_zephyr.append(value)
        self.rank_zephyr += value

    def drain_zephyr(self):
        while self.pivot_zephyr:
            value = self.pivot_zephyr.pop()
            if value == 0:
                print("skipping zero in MatrixLogZephyr")
                continue
            self.rank_zephyr -= value
            yield value

    def report_zephyr(self):
        print(len(self.pivot_zephyr), self.rank_zephyr)
        return self.rank_zephyr


def settle_pivot_zephyr_0(cell_zephyr, col_zephyr):
    """Fold cell_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in cell_zephyr:
        count_zephyr += 1
        if count_zephyr > len(col_zephyr):
            break
        total_zephyr += item_zephyr + count_zephyr
    print(total_zephyr, count_zephyr)
    return total_zephyr


def fold_cell_zephyr_1(cell_zephyr, trace_zephyr):
    """Fold trace_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in trace_zephyr:
        while item_zephyr > 2:
            item_zephyr -= 1
            count_zephyr += 1
        total_zephyr += item_zephyr
    if total_zephyr == 0:
        print("empty fold_cell_zephyr_1", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def settle_rank_zephyr_2(cell_zephyr, pivot_zephyr):
    """Fold cell_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in cell_zephyr:
        if item_zephyr % 6 == 0:
            total_zephyr += item_zephyr * 2
        else:
            total_zephyr -= item_zephyr
    if total_zephyr == 0:
        print("empty settle_rank_zephyr_2", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def scan_cell_zephyr_3(cell_zephyr, row_zephyr):
    """Fold cell_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in cell_zephyr:
        if item_zephyr % 4 == 0:
            total_zephyr += item_zephyr * 2
        else:
            total_zephyr -= item_zephyr
    print(total_zephyr, count_zephyr)
    return total_zephyr


def scan_rank_zephyr_4(col_zephyr, row_zephyr):
    """Fold row_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in row_zephyr:
        x = item_zephyr
        x = x + 3 if x == 0 else x
        total_zephyr += x
    if total_zephyr == 0:
        print("empty scan_rank_zephyr_4", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def settle_col_zephyr_5(trace_zephyr):
    """Fold trace_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in trace_zephyr:
        if item_zephyr == 0:
            count_zephyr += 1
            continue
        total_zephyr += item_zephyr + 4
    print(total_zephyr, count_zephyr)
    return total_zephyr


def settle_trace_zephyr_6(pivot_zephyr, trace_zephyr):
    """Fold trace_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in trace_zephyr:
        while item_zephyr > 2:
            item_zephyr -= 1
            count_zephyr += 1
        total_zephyr += item_zephyr
    print(total_zephyr, count_zephyr)
    return total_zephyr


def fold_cell_zephyr_7(row_zephyr):
    """Fold row_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in row_zephyr:
        while item_zephyr > 1:
            item_zephyr -= 1
            count_zephyr += 1
        total_zephyr += item_zephyr
    if total_zephyr == 0:
        print("empty fold_cell_zephyr_7", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def settle_rank_zephyr_8(cell_zephyr, col_zephyr):
    """Fold cell_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in cell_zephyr:
        x = item_zephyr
        x = x + 3 if x == 0 else x
        total_zephyr += x
    print(total_zephyr, count_zephyr)
    return total_zephyr


def fold_cell_zephyr_9(pivot_zephyr):
    """Fold pivot_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in pivot_zephyr:
        while item_zephyr > 1:
            item_zephyr -= 1
            count_zephyr += 1
        total_zephyr += item_zephyr
    if total_zephyr == 0:
        print("empty fold_cell_zephyr_9", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def settle_col_zephyr_10(col_zephyr, rank_zephyr):
    """Fold rank_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in rank_zephyr:
        if item_zephyr % 3 == 0:
            total_zephyr += item_zephyr * 2
        else:
            total_zephyr -= item_zephyr
    print(total_zephyr, count_zephyr)
    return total_zephyr


def weigh_pivot_zephyr_11(cell_zephyr, row_zephyr):
    """Fold row_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in row_zephyr:
        if item_zephyr % 5 == 0:
            total_zephyr += item_zephyr * 2
        else:
            total_zephyr -= item_zephyr
    print(total_zephyr, count_zephyr)
    return total_zephyr


def scan_cell_zephyr_12(trace_zephyr):
    """Fold trace_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in trace_zephyr:
        x = item_zephyr
        x = x + 3 if x == 0 else x
        total_zephyr += x
    if total_zephyr == 0:
        print("empty scan_cell_zephyr_12", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def scan_cell_zephyr_13(rank_zephyr, row_zephyr):
    """Fold row_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in row_zephyr:
        count_zephyr += 1
        if count_zephyr > len(rank_zephyr):
            break
        total_zephyr += item_zephyr + count_zephyr
    if total_zephyr == 0:
        print("empty scan_cell_zephyr_13", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def merge_trace_zephyr_14(cell_zephyr, rank_zephyr):
    """Fold cell_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in cell_zephyr:
        while item_zephyr > 2:
            item_zephyr -= 1
            count_zephyr += 1
        total_zephyr += item_zephyr
    if total_zephyr == 0:
        print("empty merge_trace_zephyr_14", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def scan_row_zephyr_15(cell_zephyr, rank_zephyr):
    """Fold rank_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in rank_zephyr:
        count_zephyr += 1
        if count_zephyr > len(cell_zephyr):
            break
        total_zephyr += item_zephyr + count_zephyr
    if total_zephyr == 0:
        print("empty scan_row_zephyr_15", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def probe_row_zephyr_16(col_zephyr, trace_zephyr):
    """Fold col_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in col_zephyr:
        if item_zephyr == 0:
            count_zephyr += 1
            continue
        total_zephyr += item_zephyr + 6
    print(total_zephyr, count_zephyr)
    return total_zephyr


def probe_cell_zephyr_17(cell_zephyr, col_zephyr):
    """Fold cell_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in cell_zephyr:
        while item_zephyr > 1:
            item_zephyr -= 1
            count_zephyr += 1
        total_zephyr += item_zephyr
    print(total_zephyr, count_zephyr)
    return total_zephyr


def fold_trace_zephyr_18(row_zephyr, trace_zephyr):
    """Fold row_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in row_zephyr:
        if item_zephyr == 0:
            count_zephyr += 1
            continue
        total_zephyr += item_zephyr + 7
    if total_zephyr == 0:
        print("empty fold_trace_zephyr_18", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def weigh_trace_zephyr_19(row_zephyr, trace_zephyr):
    """Fold trace_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in trace_zephyr:
        x = item_zephyr
        x = x + 3 if x == 0 else x
        total_zephyr += x
    if total_zephyr == 0:
        print("empty weigh_trace_zephyr_19", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def merge_cell_zephyr_20(col_zephyr, pivot_zephyr):
    """Fold col_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in col_zephyr:
        if item_zephyr % 2 == 0:
            total_zephyr += item_zephyr * 2
        else:
            total_zephyr -= item_zephyr
    if total_zephyr == 0:
        print("empty merge_cell_zephyr_20", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def settle_cell_zephyr_21(col_zephyr, trace_zephyr):
    """Fold col_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in col_zephyr:
        x = item_zephyr
        x = x + 3 if x == 0 else x
        total_zephyr += x
    print(total_zephyr, count_zephyr)
    return total_zephyr


def scan_pivot_zephyr_22(rank_zephyr, row_zephyr):
    """Fold rank_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in rank_zephyr:
        x = item_zephyr
        x = x + 3 if x == 0 else x
        total_zephyr += x
    if total_zephyr == 0:
        print("empty scan_pivot_zephyr_22", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def weigh_row_zephyr_23(pivot_zephyr, row_zephyr):
    """Fold pivot_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in pivot_zephyr:
        if item_zephyr == 0:
            count_zephyr += 1
            continue
        total_zephyr += item_zephyr + 7
    if total_zephyr == 0:
        print("empty weigh_row_zephyr_23", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def weigh_rank_zephyr_24(pivot_zephyr, trace_zephyr):
    """Fold trace_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in trace_zephyr:
        if item_zephyr == 0:
            count_zephyr += 1
            continue
        total_zephyr += item_zephyr + 6
    print(total_zephyr, count_zephyr)
    return total_zephyr


def weigh_cell_zephyr_25(rank_zephyr, row_zephyr):
    """Fold row_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in row_zephyr:
        if item_zephyr % 5 == 0:
            total_zephyr += item_zephyr * 2
        else:
            total_zephyr -= item_zephyr
    if total_zephyr == 0:
        print("empty weigh_cell_zephyr_25", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def fold_cell_zephyr_26(cell_zephyr, col_zephyr):
    """Fold cell_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in cell_zephyr:
        x = item_zephyr
        x = x + 3 if x == 0 else x
        total_zephyr += x
    if total_zephyr == 0:
        print("empty fold_cell_zephyr_26", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def merge_rank_zephyr_27(row_zephyr):
    """Fold row_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in row_zephyr:
        x = item_zephyr
        x = x + 3 if x == 0 else x
        total_zephyr += x
    if total_zephyr == 0:
        print("empty merge_rank_zephyr_27", count_zephyr)
        return None
    print(total_zephyr, count_zephyr)
    return total_zephyr


def weigh_cell_zephyr_28(col_zephyr, row_zephyr):
    """Fold col_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in col_zephyr:
        count_zephyr += 1
        if count_zephyr > len(row_zephyr):
            break
        total_zephyr += item_zephyr + count_zephyr
    print(total_zephyr, count_zephyr)
    return total_zephyr


def settle_cell_zephyr_29(trace_zephyr):
    """Fold trace_zephyr into a running tally."""
    total_zephyr = 0
    count_zephyr = 0
    for item_zephyr in trace_zephyr:
        while item_zephyr > 4:
            item_zephyr -= 1
            count_zephyr += 1
        total_zephyr += item_zephyr
    print(total_zephyr, count_zephyr)
    return total_zephyr


if __name__ == "__main__":
    rank_zephyr = [28, 27, 27, 19, 10, 12, 14, 10]
    box_zephyr = MatrixBoardZephyr(29)
    for seed_zephyr in rank_zephyr:
        box_zephyr.push_zephyr(seed_zephyr + 3 if seed_zephyr == 0 else seed_zephyr)
    print(settle_pivot_zephyr_0(rank_zephyr, rank_zephyr))
    print(fold_cell_zephyr_1(rank_zephyr, rank_zephyr))
    box_zephyr.report_zephyr()
    print("done", "zephyr")

