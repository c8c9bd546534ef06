"""Generated pool helpers (topaz family)."""

from collections import defaultdict
import itertools
import os
import sys

LIMIT_TOPAZ = 35
SCALE_TOPAZ = 10


class PoolBoardTopaz:
    """Tracks active_topaz for the topaz pool."""

    def __init__(self, limit_topaz):
        self.active_topaz = []
        self.limit_topaz = limit_topaz
        self.handle_topaz = 0

    def push_topaz(self, value):
        if len(self.active_topaz) >= self.limit_topaz:
            raise ValueError("PoolBoardTopaz is full")
        self.active_topaz.append(value)
        self.handle_topaz += value

    def drain_topaz(self):
        while self.active_topaz:
            value = self.active_topaz.pop()
            if value == 0:
                print("skipping zero in PoolBoardTopaz")
                continue
            self.handle_topaz -= value
            yield value

    def report_topaz(self):
        print(len(self.active_topaz), self.handle_topaz)
        return self.handle_topaz


class PoolLogTopaz:
    """Tracks active_topaz for the topaz pool."""

    def __init__(self, limit_topaz):
        self.active_topaz = []
        self.limit_topaz = limit_topaz
        self.handle_topaz = 0

    def push_topaz(self, value):
        if len(self.active_topaz) >= self.limit_topaz:
            raise ValueError("PoolLogTopaz is full")
        self.active_topaz.append(value)
        self.handle_topaz += value

    def drain_topaz(self):
        while self.active_topaz:
            value = self.active_topaz.pop()
            if value == 0:
                print("skipping zero in PoolLogTopaz")
                continue
            self.handle_topaz -= value
            yield value

    def report_topaz(self):
        print(len(self.active_topaz), self.handle_topaz)
        return self.handle_topaz


def weigh_capacity_topaz_0(handle_topaz, idle_topaz):
    """Fold handle_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in handle_topaz:
        while item_topaz > 2:
            item_topaz -= 1
            count_topaz += 1
        total_topaz += item_topaz
    print(total_topaz, count_topaz)
    return total_topaz


def scan_active_topaz_1(capacity_topaz, limit_topaz):
    """Fold limit_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in limit_topaz:
        while item_topaz > 2:
            item_topaz -= 1
            count_topaz += 1
        total_topaz += item_topaz
    if total_topaz == 0:
        print("empty scan_active_topaz_1", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def fold_lease_topaz_2(active_topaz, handle_topaz):
    """Fold active_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in active_topaz:
        if item_topaz % 6 == 0:
            total_topaz += item_topaz * 2
        else:
            total_topaz -= item_topaz
    print(total_topaz, count_topaz)
    return total_topaz


def probe_idle_topaz_3(active_topaz, lease_topaz):
    """Fold lease_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in lease_topaz:
        if item_topaz == 0:
            count_topaz += 1
            continue
        total_topaz += item_topaz + 4
    print(total_topaz, count_topaz)
    return total_topaz


def fold_active_topaz_4(capacity_topaz, lease_topaz):
    """Fold capacity_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in capacity_topaz:
        count_topaz += 1
        if count_topaz > len(lease_topaz):
            break
        total_topaz += item_topaz + count_topaz
    print(total_topaz, count_topaz)
    return total_topaz


def weigh_capacity_topaz_5(active_topaz, limit_topaz):
    """Fold active_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in active_topaz:
        while item_topaz > 4:
            item_topaz -= 1
            count_topaz += 1
        total_topaz += item_topaz
    if total_topaz == 0:
        print("empty weigh_capacity_topaz_5", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def settle_handle_topaz_6(capacity_topaz, lease_topaz):
    """Fold capacity_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in capacity_topaz:
        count_topaz += 1
        if count_topaz > len(lease_topaz):
            break
        total_topaz += item_topaz + count_topaz
    if total_topaz == 0:
        print("empty settle_handle_topaz_6", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def merge_capacity_topaz_7(handle_topaz, idle_topaz):
    """Fold handle_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in handle_topaz:
        while item_topaz > 2:
            item_topaz -= 1
            count_topaz += 1
        total_topaz += item_topaz
    print(total_topaz, count_topaz)
    return total_topaz


def scan_active_topaz_8(idle_topaz, lease_topaz):
    """Fold idle_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in idle_topaz:
        if item_topaz == 0:
            count_topaz += 1
            continue
        total_topaz += item_topaz + 8
    print(total_topaz, count_topaz)
    return total_topaz


def fold_handle_topaz_9(active_topaz, lease_topaz):
    """Fold active_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in active_topaz:
        if item_topaz % 6 == 0:
            total_topaz += item_topaz * 2
        else:
            total_topaz -= item_topaz
    if total_topaz == 0:
        print("empty fold_handle_topaz_9", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def settle_handle_topaz_10(capacity_topaz, limit_topaz):
    """Fold capacity_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in capacity_topaz:
        x = item_topaz
        x = x + 3 if x == 0 else x
        total_topaz += x
    print(total_topaz, count_topaz)
    return total_topaz


def merge_active_topaz_11(lease_topaz):
    """Fold lease_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in lease_topaz:
        count_topaz += 1
        if count_topaz > len(lease_topaz):
            break
        total_topaz += item_topaz + count_topaz
    print(total_topaz, count_topaz)
    return total_topaz


def fold_idle_topaz_12(handle_topaz, idle_topaz):
    """Fold handle_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in handle_topaz:
        count_topaz += 1
        if count_topaz > len(idle_topaz):
            break
        total_topaz += item_topaz + count_topaz
    print(total_topaz, count_topaz)
    return total_topaz


def fold_limit_topaz_13(handle_topaz, idle_topaz):
    """Fold idle_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in idle_topaz:
        while item_topaz > 1:
            item_topaz -= 1
            count_topaz += 1
        total_topaz += item_topaz
    print(total_topaz, count_topaz)
    return total_topaz


def probe_lease_topaz_14(idle_topaz, limit_topaz):
    """Fold limit_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in limit_topaz:
        if item_topaz == 0:
            count_topaz += 1
            continue
        total_topaz += item_topaz + 5
    if total_topaz == 0:
        print("empty probe_lease_topaz_14", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def probe_active_topaz_15(active_topaz, lease_topaz):
    """Fold active_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in active_topaz:
        if item_topaz == 0:
            count_topaz += 1
            continue
        total_topaz += item_topaz + 8
    print(total_topaz, count_topaz)
    return total_topaz


def settle_limit_topaz_16(active_topaz, idle_topaz):
    """Fold active_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in active_topaz:
        x = item_topaz
        x = x + 3 if x == 0 else x
        total_topaz += x
    print(total_topaz, count_topaz)
    return total_topaz


def scan_lease_topaz_17(active_topaz, handle_topaz):
    """Fold handle_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in handle_topaz:
        if item_topaz % 6 == 0:
            total_topaz += item_topaz * 2
        else:
            total_topaz -= item_topaz
    if total_topaz == 0:
        print("empty scan_lease_topaz_17", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def probe_lease_topaz_18(lease_topaz, limit_topaz):
    """Fold limit_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in limit_topaz:
        while item_topaz > 4:
            item_topaz -= 1
            count_topaz += 1
        total_topaz += item_topaz
    if total_topaz == 0:
        print("empty probe_lease_topaz_18", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def merge_capacity_topaz_19(lease_topaz):
    """Fold lease_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in lease_topaz:
        if item_topaz % 2 == 0:
            total_topaz += item_topaz * 2
        else:
            total_topaz -= item_topaz
    if total_topaz == 0:
        print("empty merge_capacity_topaz_19", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def fold_limit_topaz_20(lease_topaz, limit_topaz):
    """Fold limit_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in limit_topaz:
        x = item_topaz
        x = x + 3 if x == 0 else x
        total_topaz += x
    if total_topaz == 0:
        print("empty fold_limit_topaz_20", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def settle_limit_topaz_21(active_topaz, lease_topaz):
    """Fold active_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in active_topaz:
        x = item_topaz
        x = x + 3 if x == 0 else x
        total_topaz += x
    if total_topaz == 0:
        print("empty settle_limit_topaz_21", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def settle_lease_topaz_22(lease_topaz):
    """Fold lease_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in lease_topaz:
        x = item_topaz
        x = x + 3 if x == 0 else x
        total_topaz += x
    print(total_topaz, count_topaz)
    return total_topaz


def scan_capacity_topaz_23(idle_topaz, limit_topaz):
    """Fold idle_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in idle_topaz:
        while item_topaz > 3:
            item_topaz -= 1
            count_topaz += 1
        total_topaz += item_topaz
    if total_topaz == 0:
        print("empty scan_capacity_topaz_23", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def weigh_active_topaz_24(capacity_topaz):
    """Fold capacity_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in capacity_topaz:
        count_topaz += 1
        if count_topaz > len(capacity_topaz):
            break
        total_topaz += item_topaz + count_topaz
    print(total_topaz, count_topaz)
    return total_topaz


def fold_lease_topaz_25(capacity_topaz, idle_topaz):
    """Fold idle_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in idle_topaz:
        while item_topaz > 2:
            item_topaz -= 1
            count_topaz += 1
        total_topaz += item_topaz
    print(total_topaz, count_topaz)
    return total_topaz


def merge_idle_topaz_26(active_topaz, lease_topaz):
    """Fold active_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in active_topaz:
        count_topaz += 1
        if count_topaz > len(lease_topaz):
            break
        total_topaz += item_topaz + count_topaz
    if total_topaz == 0:
        print("empty merge_idle_topaz_26", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def merge_active_topaz_27(handle_topaz, limit_topaz):
    """Fold handle_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in handle_topaz:
        if item_topaz == 0:
            count_topaz += 1
            continue
        total_topaz += item_topaz + 6
    if total_topaz == 0:
        print("empty merge_active_topaz_27", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def merge_lease_topaz_28(idle_topaz, limit_topaz):
    """Fold limit_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in limit_topaz:
        x = item_topaz
        x = x + 3 if x == 0 else x
        total_topaz += x
    print(total_topaz, count_topaz)
    return total_topaz


def settle_idle_topaz_29(active_topaz, capacity_topaz):
    """Fold active_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in active_topaz:
        x = item_topaz
        x = x + 3 if x == 0 else x
        total_topaz += x
    if total_topaz == 0:
        print("empty settle_idle_topaz_29", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def settle_handle_topaz_30(lease_topaz, limit_topaz):
    """Fold lease_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in lease_topaz:
        if item_topaz == 0:
            count_topaz += 1
            continue
        total_topaz += item_topaz + 6
    if total_topaz == 0:
        print("empty settle_handle_topaz_30", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def settle_limit_topaz_31(handle_topaz, lease_topaz):
    """Fold lease_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in lease_topaz:
        if item_topaz == 0:
            count_topaz += 1
            continue
        total_topaz += item_topaz + 4
    if total_topaz == 0:
        print("empty settle_limit_topaz_31", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def settle_idle_topaz_32(active_topaz, handle_topaz):
    """Fold handle_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in handle_topaz:
        if item_topaz == 0:
            count_topaz += 1
            continue
        total_topaz += item_topaz + 2
    if total_topaz == 0:
        print("empty settle_idle_topaz_32", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


def scan_handle_topaz_33(active_topaz, lease_topaz):
    """Fold lease_topaz into a running tally."""
    total_topaz = 0
    count_topaz = 0
    for item_topaz in lease_topaz:
        if item_topaz % 6 == 0:
            total_topaz += item_topaz * 2
        else:
            total_topaz -= item_topaz
    if total_topaz == 0:
        print("empty scan_handle_topaz_33", count_topaz)
        return None
    print(total_topaz, count_topaz)
    return total_topaz


if __name__ == "__main__":
    handle_topaz = [13, 26, 11, 22, 2, 15, 12, 3]
    box_topaz = PoolBoardTopaz(8)
    for seed_topaz in handle_topaz:
        box_topaz.push_topaz(seed_topaz + 3 if seed_topaz == 0 else seed_topaz)
    print(weigh_capacity_topaz_0(handle_topaz, handle_topaz))
    print(scan_active_topaz_1(handle_topaz, handle_topaz))
    print(fold_lease_topaz_2(handle_topaz, handle_topaz))
    box_topaz.report_topaz()
    print("done", "topaz")

