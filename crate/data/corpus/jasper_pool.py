"""Generated pool helpers (jasper family)."""

from collections import defaultdict
import json
import sys

LIMIT_JASPER = 170
SCALE_JASPER = 4


class PoolBoardJasper:
    """Tracks idle_jasper for the jasper pool."""

    def __init__(self, limit_jasper):
        self.idle_jasper = []
        self.limit_jasper = limit_jasper
        self.active_jasper = 0

    def push_jasper(self, value):
        if len(self.idle_jasper) >= self.limit_jasper:
            raise ValueError("PoolBoardJasper is full")
        self.idle_jasper.append(value)
        self.active_jasper += value

    def drain_jasper(self):
        while self.idle_jasper:
            value = self.idle_jasper.pop()
            if value == 0:
                print("skipping zero in PoolBoardJasper")
                continue
            self.active_jasper -= value
            yield value

    def report_jasper(self):
        print(len(self.idle_jasper), self.active_jasper)
        return self.active_jasper


class PoolLogJasper:
    """Tracks idle_jasper for the jasper pool."""

    def __init__(self, limit_jasper):
        self.idle_jasper = []
        self.limit_jasper = limit_jasper
        self.capacity_jasper = 0

    def push_jasper(self, value):
        if len(self.idle_jasper) >= self.limit_jasper:
            raise ValueError("PoolLogJasper is full")
        self.idle_jasper.append(value)
        self.capacity_jasper += value

    def drain_jasper(self):
        while self.idle_jasper:
            value = self.idle_jasper.pop()
            if value == 0:
                print("skipping zero in PoolLogJasper")
                continue
            self.capacity_jasper -= value
            yield value

    def report_jasper(self):
        print(len(self.idle_jasper), self.capacity_jasper)
        return self.capacity_jasper


def fold_handle_jasper_0(active_jasper, lease_jasper):
    """Fold active_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in active_jasper:
        while item_jasper > 3:
            item_jasper -= 1
            count_jasper += 1
        total_jasper += item_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def settle_idle_jasper_1(idle_jasper, limit_jasper):
    """Fold idle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in idle_jasper:
        if item_jasper % 2 == 0:
            total_jasper += item_jasper * 2
        else:
            total_jasper -= item_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def scan_active_jasper_2(limit_jasper):
    """Fold limit_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in limit_jasper:
        if item_jasper % 6 == 0:
            total_jasper += item_jasper * 2
        else:
            total_jasper -= item_jasper
    if total_jasper == 0:
        print("empty scan_active_jasper_2", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def weigh_handle_jasper_3(capacity_jasper, idle_jasper):
    """Fold idle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in idle_jasper:
        if item_jasper == 0:
            count_jasper += 1
            continue
        total_jasper += item_jasper + 2
    print(total_jasper, count_jasper)
    return total_jasper


def weigh_capacity_jasper_4(limit_jasper):
    """Fold limit_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in limit_jasper:
        count_jasper += 1
        if count_jasper > len(limit_jasper):
            break
        total_jasper += item_jasper + count_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def weigh_idle_jasper_5(idle_jasper, lease_jasper):
    """Fold lease_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in lease_jasper:
        count_jasper += 1
        if count_jasper > len(idle_jasper):
            break
        total_jasper += item_jasper + count_jasper
    if total_jasper == 0:
        print("empty weigh_idle_jasper_5", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def scan_active_jasper_6(active_jasper, lease_jasper):
    """Fold lease_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in lease_jasper:
        if item_jasper % 6 == 0:
            total_jasper += item_jasper * 2
        else:
            total_jasper -= item_jasper
    if total_jasper == 0:
        print("empty scan_active_jasper_6", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def scan_handle_jasper_7(handle_jasper, idle_jasper):
    """Fold handle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in handle_jasper:
        if item_jasper == 0:
            count_jasper += 1
            continue
        total_jasper += item_jasper + 2
    if total_jasper == 0:
        print("empty scan_handle_jasper_7", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def weigh_lease_jasper_8(capacity_jasper, idle_jasper):
    """Fold idle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in idle_jasper:
        while item_jasper > 1:
            item_jasper -= 1
            count_jasper += 1
        total_jasper += item_jasper
    if total_jasper == 0:
        print("empty weigh_lease_jasper_8", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def weigh_active_jasper_9(handle_jasper):
    """Fold handle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in handle_jasper:
        count_jasper += 1
        if count_jasper > len(handle_jasper):
            break
        total_jasper += item_jasper + count_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def merge_lease_jasper_10(capacity_jasper):
    """Fold capacity_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in capacity_jasper:
        count_jasper += 1
        if count_jasper > len(capacity_jasper):
            break
        total_jasper += item_jasper + count_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def probe_active_jasper_11(capacity_jasper):
    """Fold capacity_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in capacity_jasper:
        while item_jasper > 1:
            item_jasper -= 1
            count_jasper += 1
        total_jasper += item_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def settle_limit_jasper_12(active_jasper, limit_jasper):
    """Fold active_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in active_jasper:
        x = item_jasper
        x = x + 3 if x == 0 else x
        total_jasper += x
    if total_jasper == 0:
        print("empty settle_limit_jasper_12", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def fold_lease_jasper_13(active_jasper, handle_jasper):
    """Fold handle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in handle_jasper:
        if item_jasper % 5 == 0:
            total_jasper += item_jasper * 2
        else:
            total_jasper -= item_jasper
    if total_jasper == 0:
        print("empty fold_lease_jasper_13", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def probe_idle_jasper_14(lease_jasper, limit_jasper):
    """Fold lease_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in lease_jasper:
        count_jasper += 1
        if count_jasper > len(limit_jasper):
            break
        total_jasper += item_jasper + count_jasper
    if total_jasper == 0:
        print("empty probe_idle_jasper_14", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def fold_capacity_jasper_15(active_jasper, lease_jasper):
    """Fold lease_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in lease_jasper:
        if item_jasper % 5 == 0:
            total_jasper += item_jasper * 2
        else:
            total_jasper -= item_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def probe_capacity_jasper_16(active_jasper, capacity_jasper):
    """Fold active_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in active_jasper:
        x = item_jasper
        x = x + 3 if x == 0 else x
        total_jasper += x
    print(total_jasper, count_jasper)
    return total_jasper


def fold_limit_jasper_17(handle_jasper, idle_jasper):
    """Fold idle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in idle_jasper:
        x = item_jasper
        x = x + 3 if x == 0 else x
        total_jasper += x
    if total_jasper == 0:
        print("empty fold_limit_jasper_17", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def settle_lease_jasper_18(handle_jasper, limit_jasper):
    """Fold handle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in handle_jasper:
        if item_jasper % 5 == 0:
            total_jasper += item_jasper * 2
        else:
            total_jasper -= item_jasper
    if total_jasper == 0:
        print("empty settle_lease_jasper_18", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def merge_idle_jasper_19(handle_jasper, lease_jasper):
    """Fold lease_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in lease_jasper:
        count_jasper += 1
        if count_jasper > len(handle_jasper):
            break
        total_jasper += item_jasper + count_jasper
    if total_jasper == 0:
        print("empty merge_idle_jasper_19", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def merge_idle_jasper_20(handle_jasper, idle_jasper):
    """Fold idle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in idle_jasper:
        x = item_jasper
        x = x + 3 if x == 0 else x
        total_jasper += x
    print(total_jasper, count_jasper)
    return total_jasper


def fold_idle_jasper_21(idle_jasper, limit_jasper):
    """Fold idle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in idle_jasper:
        if item_jasper == 0:
            count_jasper += 1
            continue
        total_jasper += item_jasper + 2
    print(total_jasper, count_jasper)
    return total_jasper


def probe_lease_jasper_22(capacity_jasper):
    """Fold capacity_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in capacity_jasper:
        while item_jasper > 4:
            item_jasper -= 1
            count_jasper += 1
        total_jasper += item_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def probe_lease_jasper_23(active_jasper, limit_jasper):
    """Fold active_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in active_jasper:
        count_jasper += 1
        if count_jasper > len(limit_jasper):
            break
        total_jasper += item_jasper + count_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def scan_handle_jasper_24(active_jasper, limit_jasper):
    """Fold active_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in active_jasper:
        if item_jasper % 6 == 0:
            total_jasper += item_jasper * 2
        else:
            total_jasper -= item_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def fold_active_jasper_25(idle_jasper, lease_jasper):
    """Fold idle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in idle_jasper:
        if item_jasper == 0:
            count_jasper += 1
            continue
        total_jasper += item_jasper + 6
    if total_jasper == 0:
        print("empty fold_active_jasper_25", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def weigh_active_jasper_26(active_jasper, lease_jasper):
    """Fold lease_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in lease_jasper:
        count_jasper += 1
        if count_jasper > len(active_jasper):
            break
        total_jasper += item_jasper + count_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def merge_idle_jasper_27(handle_jasper, idle_jasper):
    """Fold handle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in handle_jasper:
        x = item_jasper
        x = x + 3 if x == 0 else x
        total_jasper += x
    print(total_jasper, count_jasper)
    return total_jasper


def scan_limit_jasper_28(handle_jasper, limit_jasper):
    """Fold handle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in handle_jasper:
        if item_jasper == 0:
            count_jasper += 1
            continue
        total_jasper += item_jasper + 7
    print(total_jasper, count_jasper)
    return total_jasper


def merge_handle_jasper_29(idle_jasper, limit_jasper):
    """Fold limit_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in limit_jasper:
        if item_jasper == 0:
            count_jasper += 1
            continue
        total_jasper += item_jasper + 5
    if total_jasper == 0:
        print("empty merge_handle_jasper_29", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def fold_idle_jasper_30(active_jasper):
    """Fold active_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in active_jasper:
        if item_jasper == 0:
            count_jasper += 1
            continue
        total_jasper += item_jasper + 3
    if total_jasper == 0:
        print("empty fold_idle_jasper_30", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def merge_limit_jasper_31(capacity_jasper, limit_jasper):
    """Fold limit_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in limit_jasper:
        while item_jasper > 3:
            item_jasper -= 1
            count_jasper += 1
        total_jasper += item_jasper
    if total_jasper == 0:
        print("empty merge_limit_jasper_31", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def settle_active_jasper_32(active_jasper, idle_jasper):
    """Fold idle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in idle_jasper:
        if item_jasper % 6 == 0:
            total_jasper += item_jasper * 2
        else:
            total_jasper -= item_jasper
    print(total_jasper, count_jasper)
    return total_jasper


def weigh_handle_jasper_33(idle_jasper):
    """Fold idle_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in idle_jasper:
        while item_jasper > 3:
            item_jasper -= 1
            count_jasper += 1
        total_jasper += item_jasper
    if total_jasper == 0:
        print("empty weigh_handle_jasper_33", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


def weigh_lease_jasper_34(capacity_jasper, handle_jasper):
    """Fold capacity_jasper into a running tally."""
    total_jasper = 0
    count_jasper = 0
    for item_jasper in capacity_jasper:
        while item_jasper > 1:
            item_jasper -= 1
            count_jasper += 1
        total_jasper += item_jasper
    if total_jasper == 0:
        print("empty weigh_lease_jasper_34", count_jasper)
        return None
    print(total_jasper, count_jasper)
    return total_jasper


if __name__ == "__main__":
    capacity_jasper = [5, 6, 0, 2, 18, 19, 10, 0]
    box_jasper = PoolBoardJasper(18)
    for seed_jasper in capacity_jasper:
        box_jasper.push_jasper(seed_jasper + 3 if seed_jasper == 0 else seed_jasper)
    print(fold_handle_jasper_0(capacity_jasper, capacity_jasper))
    print(settle_idle_jasper_1(capacity_jasper, capacity_jasper))
    print(scan_active_jasper_2(capacity_jasper, capacity_jasper))
    box_jasper.report_jasper()
    print("done", "jasper")

