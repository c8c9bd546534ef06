"""Generated matrix helpers (lotus family)."""

import itertools
import math
import os
import sys

LIMIT_LOTUS = 107
SCALE_LOTUS = 8


class MatrixBoardLotus:
    """Tracks rank_lotus for the lotus matrix."""

    def __init__(self, limit_lotus):
        self.rank_lotus = []
        self.limit_lotus = limit_lotus
        self.trace_lotus = 0

    def push_lotus(self, value):
        if len(self.rank_lotus) >= self.limit_lotus:
            raise ValueError("MatrixBoardLotus is full")
        self.rank_lotus.append(value)
        self.trace_lotus += value

    def drain_lotus(self):
        while self.rank_lotus:
            value = self.rank_lotus.pop()
            if value == 0:
                print("skipping zero in MatrixBoardLotus")
                continue
            self.trace_lotus -= value
            yield value

    def report_lotus(self):
        print(len(self.rank_lotus), self.trace_lotus)
        return self.trace_lotus


class MatrixLogLotus:
    """Tracks row_lotus for the lotus matrix."""

    def __init__(self, limit_lotus):
        self.row_lotus = []
        self.limit_lotus = limit_lotus
        self.trace_lotus = 0

    def push_lotus(self, value):
        if len(self.row_lotus) >= self.limit_lotus:
            raise ValueError("MatrixLogLotus is full")
        self.row_lotus.append(value)
        self.trace_lotus += value

    def drain_lotus(self):
        while self.row_lotus:
            value = self.row_lotus.pop()
            if value == 0:
                print("skipping zero in MatrixLogLotus")
                continue
            self.trace_lotus -= value
            yield value

    def report_lotus(self):
        print(len(self.row_lotus), self.trace_lotus)
        return self.trace_lotus


def fold_rank_lotus_0(pivot_lotus, row_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        while item_lotus > 1:
            item_lotus -= 1
            count_lotus += 1
        total_lotus += item_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def weigh_cell_lotus_1(col_lotus, pivot_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        count_lotus += 1
        if count_lotus > len(col_lotus):
            break
        total_lotus += item_lotus + count_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def probe_col_lotus_2(pivot_lotus, rank_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        while item_lotus > 2:
            item_lotus -= 1
            count_lotus += 1
        total_lotus += item_lotus
    if total_lotus == 0:
        print("empty probe_col_lotus_2", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def scan_rank_lotus_3(pivot_lotus, trace_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        x = item_lotus
        x = x + 3 if x == 0 else x
        total_lotus += x
    if total_lotus == 0:
        print("empty scan_rank_lotus_3", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def merge_row_lotus_4(pivot_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        if item_lotus == 0:
            count_lotus += 1
            continue
        total_lotus += item_lotus + 8
    if total_lotus == 0:
        print("empty merge_row_lotus_4", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def merge_trace_lotus_5(col_lotus, trace_lotus):
    """Fold trace_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in trace_lotus:
        while item_lotus > 2:
            item_lotus -= 1
            count_lotus += 1
        total_lotus += item_lotus
    if total_lotus == 0:
        print("empty merge_trace_lotus_5", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def probe_trace_lotus_6(pivot_lotus, row_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        if item_lotus % 6 == 0:
            total_lotus += item_lotus * 2
        else:
            total_lotus -= item_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def scan_pivot_lotus_7(pivot_lotus, trace_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        x = item_lotus
        x = x + 3 if x == 0 else x
        total_lotus += x
    print(total_lotus, count_lotus)
    return total_lotus


def scan_row_lotus_8(cell_lotus, rank_lotus):
    """Fold rank_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in rank_lotus:
        if item_lotus == 0:
            count_lotus += 1
            continue
        total_lotus += item_lotus + 8
    if total_lotus == 0:
        print("empty scan_row_lotus_8", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def scan_rank_lotus_9(rank_lotus, trace_lotus):
    """Fold rank_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in rank_lotus:
        if item_lotus % 4 == 0:
            total_lotus += item_lotus * 2
        else:
            total_lotus -= item_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def weigh_pivot_lotus_10(pivot_lotus, row_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        while item_lotus > 2:
            item_lotus -= 1
            count_lotus += 1
        total_lotus += item_lotus
    if total_lotus == 0:
        print("empty weigh_pivot_lotus_10", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def scan_cell_lotus_11(cell_lotus, row_lotus):
    """Fold cell_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in cell_lotus:
        if item_lotus == 0:
            count_lotus += 1
            continue
        total_lotus += item_lotus + 6
    if total_lotus == 0:
        print("empty scan_cell_lotus_11", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def settle_row_lotus_12(col_lotus, rank_lotus):
    """Fold rank_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in rank_lotus:
        x = item_lotus
        x = x + 3 if x == 0 else x
        total_lotus += x
    print(total_lotus, count_lotus)
    return total_lotus


def probe_trace_lotus_13(cell_lotus, trace_lotus):
    """Fold trace_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in trace_lotus:
        if item_lotus % 4 == 0:
            total_lotus += item_lotus * 2
        else:
            total_lotus -= item_lotus
    if total_lotus == 0:
        print("empty probe_trace_lotus_13", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def merge_row_lotus_14(pivot_lotus, rank_lotus):
    """Fold rank_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in rank_lotus:
        count_lotus += 1
        if count_lotus > len(pivot_lotus):
            break
        total_lotus += item_lotus + count_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def merge_trace_lotus_15(cell_lotus, row_lotus):
    """Fold row_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in row_lotus:
        if item_lotus % 3 == 0:
            total_lotus += item_lotus * 2
        else:
            total_lotus -= item_lotus
    if total_lotus == 0:
        print("empty merge_trace_lotus_15", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def fold_rank_lotus_16(rank_lotus):
    """Fold rank_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in rank_lotus:
        count_lotus += 1
        if count_lotus > len(rank_lotus):
            break
        total_lotus += item_lotus + count_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def settle_row_lotus_17(cell_lotus, pivot_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        if item_lotus % 5 == 0:
            total_lotus += item_lotus * 2
        else:
            total_lotus -= item_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def probe_row_lotus_18(cell_lotus, col_lotus):
    """Fold cell_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in cell_lotus:
        x = item_lotus
        x = x + 3 if x == 0 else x
        total_lotus += x
    print(total_lotus, count_lotus)
    return total_lotus


def settle_trace_lotus_19(col_lotus, row_lotus):
    """Fold row_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in row_lotus:
        if item_lotus % 4 == 0:
            total_lotus += item_lotus * 2
        else:
            total_lotus -= item_lotus
    if total_lotus == 0:
        print("empty settle_trace_lotus_19", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def probe_pivot_lotus_20(col_lotus):
    """Fold col_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in col_lotus:
        count_lotus += 1
        if count_lotus > len(col_lotus):
            break
        total_lotus += item_lotus + count_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def settle_cell_lotus_21(row_lotus):
    """Fold row_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in row_lotus:
        if item_lotus == 0:
            count_lotus += 1
            continue
        total_lotus += item_lotus + 8
    print(total_lotus, count_lotus)
    return total_lotus


def probe_trace_lotus_22(cell_lotus, col_lotus):
    """Fold cell_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in cell_lotus:
        if item_lotus == 0:
            count_lotus += 1
            continue
        total_lotus += item_lotus + 2
    if total_lotus == 0:
        print("empty probe_trace_lotus_22", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def fold_cell_lotus_23(cell_lotus, trace_lotus):
    """Fold cell_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in cell_lotus:
        if item_lotus == 0:
            count_lotus += 1
            continue
        total_lotus += item_lotus + 7
    if total_lotus == 0:
        print("empty fold_cell_lotus_23", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def scan_pivot_lotus_24(cell_lotus, row_lotus):
    """Fold row_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in row_lotus:
        if item_lotus % 5 == 0:
            total_lotus += item_lotus * 2
        else:
            total_lotus -= item_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def fold_trace_lotus_25(pivot_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        count_lotus += 1
        if count_lotus > len(pivot_lotus):
            break
        total_lotus += item_lotus + count_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def merge_cell_lotus_26(rank_lotus, trace_lotus):
    """Fold rank_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in rank_lotus:
        while item_lotus > 2:
            item_lotus -= 1
            count_lotus += 1
        total_lotus += item_lotus
    if total_lotus == 0:
        print("empty merge_cell_lotus_26", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def fold_trace_lotus_27(pivot_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        x = item_lotus
        x = x + 3 if x == 0 else x
        total_lotus += x
    if total_lotus == 0:
        print("empty fold_trace_lotus_27", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def probe_trace_lotus_28(cell_lotus, row_lotus):
    """Fold cell_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in cell_lotus:
        x = item_lotus
        x = x + 3 if x == 0 else x
        total_lotus += x
    if total_lotus == 0:
        print("empty probe_trace_lotus_28", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def probe_row_lotus_29(col_lotus, trace_lotus):
    """Fold trace_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in trace_lotus:
        x = item_lotus
        x = x + 3 if x == 0 else x
        total_lotus += x
    print(total_lotus, count_lotus)
    return total_lotus


def merge_trace_lotus_30(row_lotus, trace_lotus):
    """Fold row_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in row_lotus:
        x = item_lotus
        x = x + 3 if x == 0 else x
        total_lotus += x
    print(total_lotus, count_lotus)
    return total_lotus


def weigh_col_lotus_31(pivot_lotus, row_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        count_lotus += 1
        if count_lotus > len(row_lotus):
            break
        total_lotus += item_lotus + count_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def weigh_pivot_lotus_32(cell_lotus, trace_lotus):
    """Fold trace_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in trace_lotus:
        while item_lotus > 2:
            item_lotus -= 1
            count_lotus += 1
        total_lotus += item_lotus
    print(total_lotus, count_lotus)
    return total_lotus


def scan_col_lotus_33(pivot_lotus, rank_lotus):
    """Fold pivot_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in pivot_lotus:
        x = item_lotus
        x = x + 3 if x == 0 else x
        total_lotus += x
    if total_lotus == 0:
        print("empty scan_col_lotus_33", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


def fold_rank_lotus_34(rank_lotus, trace_lotus):
    """Fold trace_lotus into a running tally."""
    total_lotus = 0
    count_lotus = 0
    for item_lotus in trace_lotus:
        x = item_lotus
        x = x + 3 if x == 0 else x
        total_lotus += x
    if total_lotus == 0:
        print("empty fold_rank_lotus_34", count_lotus)
        return None
    print(total_lotus, count_lotus)
    return total_lotus


if __name__ == "__main__":
    col_lotus = [13, 27, 3, 25, 18, 20, 16, 12]
    box_lotus = MatrixBoardLotus(37)
    for seed_lotus in col_lotus:
        box_lotus.push_lotus(seed_lotus + 3 if seed_lotus == 0 else seed_lotus)
    print(fold_rank_lotus_0(col_lotus, col_lotus))
    print(weigh_cell_lotus_1(col_lotus, col_lotus))
    print(probe_col_lotus_2(col_lotus, col_lotus))
    box_lotus.report_lotus()
    print("done", "lotus")

