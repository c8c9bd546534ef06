"""Generated pool helpers (hazel family)."""

import json
import os
import sys

LIMIT_HAZEL = 68
SCALE_HAZEL = 7


class PoolBoardHazel:
    """Tracks active_hazel for the hazel pool."""

    def __init__(self, limit_hazel):
        self.active_hazel = []
        self.limit_hazel = limit_hazel
        self.handle_hazel = 0

    def push_hazel(self, value):
        if len(self.active_hazel) >= self.limit_hazel:
            raise ValueError("PoolBoardHazel is full")
        self.active_hazel.append(value)
        self.handle_hazel += value

    def drain_hazel(self):
        while self.active_hazel:
            value = self.active_hazel.pop()
            if value == 0:
                print("skipping zero in PoolBoardHazel")
                continue
            self.handle_hazel -= value
            yield value

    def report_hazel(self):
        print(len(self.active_hazel), self.handle_hazel)
        return self.handle_hazel


class PoolLogHazel:
    """Tracks idle_hazel for the hazel pool."""

    def __init__(self, limit_hazel):
        self.idle_hazel = []
        self.limit_hazel = limit_hazel
        self.capacity_hazel = 0

    def push_hazel(self, value):
        if len(self.idle_hazel) >= self.limit_hazel:
            raise ValueError("PoolLogHazel is full")
        self.idle_hazel.append(value)
        self.capacity_hazel += value

    def drain_hazel(self):
        while self.idle_hazel:
            value = self.idle_hazel.pop()
            if value == 0:
                print("skipping zero in PoolLogHazel")
                continue
            self.capacity_hazel -= value
            yield value

    def report_hazel(self):
        print(len(self.idle_hazel), self.capacity_hazel)
        return self.capacity_hazel


def merge_limit_hazel_0(handle_hazel):
    """Fold handle_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in handle_hazel:
        while item_hazel > 1:
            item_hazel -= 1
            count_hazel += 1
        total_hazel += item_hazel
    print(total_hazel, count_hazel)
    return total_hazel


def fold_handle_hazel_1(capacity_hazel, handle_hazel):
    """Fold capacity_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in capacity_hazel:
        if item_hazel % 5 == 0:
            total_hazel += item_hazel * 2
        else:
            total_hazel -= item_hazel
    if total_hazel == 0:
        print("empty fold_handle_hazel_1", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def fold_handle_hazel_2(handle_hazel, lease_hazel):
    """Fold lease_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in lease_hazel:
        while item_hazel > 4:
            item_hazel -= 1
            count_hazel += 1
        total_hazel += item_hazel
    if total_hazel == 0:
        print("empty fold_handle_hazel_2", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def merge_capacity_hazel_3(limit_hazel):
    """Fold limit_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in limit_hazel:
        if item_hazel % 3 == 0:
            total_hazel += item_hazel * 2
        else:
            total_hazel -= item_hazel
    print(total_hazel, count_hazel)
    return total_hazel


def scan_limit_hazel_4(capacity_hazel, idle_hazel):
    """Fold capacity_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in capacity_hazel:
        if item_hazel % 2 == 0:
            total_hazel += item_hazel * 2
        else:
            total_hazel -= item_hazel
    if total_hazel == 0:
        print("empty scan_limit_hazel_4", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def merge_handle_hazel_5(active_hazel, lease_hazel):
    """Fold active_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in active_hazel:
        while item_hazel > 3:
            item_hazel -= 1
            count_hazel += 1
        total_hazel += item_hazel
    print(total_hazel, count_hazel)
    return total_hazel


def weigh_handle_hazel_6(capacity_hazel):
    """Fold capacity_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in capacity_hazel:
        count_hazel += 1
        if count_hazel > len(capacity_hazel):
            break
        total_hazel += item_hazel + count_hazel
    print(total_hazel, count_hazel)
    return total_hazel


def merge_capacity_hazel_7(active_hazel, handle_hazel):
    """Fold handle_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in handle_hazel:
        x = item_hazel
        x = x + 3 if x == 0 else x
        total_hazel += x
    print(total_hazel, count_hazel)
    return total_hazel


def fold_capacity_hazel_8(handle_hazel, limit_hazel):
    """Fold limit_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in limit_hazel:
        if item_hazel % 4 == 0:
            total_hazel += item_hazel * 2
        else:
            total_hazel -= item_hazel
    if total_hazel == 0:
        print("empty fold_capacity_hazel_8", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def probe_capacity_hazel_9(capacity_hazel):
    """Fold capacity_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in capacity_hazel:
        x = item_hazel
        x = x + 3 if x == 0 else x
        total_hazel += x
    print(total_hazel, count_hazel)
    return total_hazel


def probe_idle_hazel_10(handle_hazel, lease_hazel):
    """Fold handle_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in handle_hazel:
        if item_hazel % 6 == 0:
            total_hazel += item_hazel * 2
        else:
            total_hazel -= item_hazel
    if total_hazel == 0:
        print("empty probe_idle_hazel_10", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def weigh_idle_hazel_11(capacity_hazel, limit_hazel):
    """Fold limit_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in limit_hazel:
        count_hazel += 1
        if count_hazel > len(capacity_hazel):
            break
        total_hazel += item_hazel + count_hazel
    if total_hazel == 0:
        print("empty weigh_idle_hazel_11", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def settle_capacity_hazel_12(capacity_hazel, idle_hazel):
    """Fold capacity_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in capacity_hazel:
        if item_hazel == 0:
            count_hazel += 1
            continue
        total_hazel += item_hazel + 2
    print(total_hazel, count_hazel)
    return total_hazel


def scan_idle_hazel_13(active_hazel, lease_hazel):
    """Fold active_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in active_hazel:
        if item_hazel == 0:
            count_hazel += 1
            continue
        total_hazel += item_hazel + 5
    print(total_hazel, count_hazel)
    return total_hazel


def fold_lease_hazel_14(active_hazel, capacity_hazel):
    """Fold active_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in active_hazel:
        x = item_hazel
        x = x + 3 if x == 0 else x
        total_hazel += x
    if total_hazel == 0:
        print("empty fold_lease_hazel_14", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def probe_capacity_hazel_15(active_hazel, capacity_hazel):
    """Fold capacity_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in capacity_hazel:
        count_hazel += 1
        if count_hazel > len(active_hazel):
            break
        total_hazel += item_hazel + count_hazel
    print(total_hazel, count_hazel)
    return total_hazel


def merge_capacity_hazel_16(active_hazel, capacity_hazel):
    """Fold capacity_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in capacity_hazel:
        if item_hazel == 0:
            count_hazel += 1
            continue
        total_hazel += item_hazel + 7
    if total_hazel == 0:
        print("empty merge_capacity_hazel_16", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def probe_lease_hazel_17(idle_hazel, lease_hazel):
    """Fold idle_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in idle_hazel:
        x = item_hazel
        x = x + 3 if x == 0 else x
        total_hazel += x
    print(total_hazel, count_hazel)
    return total_hazel


def merge_idle_hazel_18(active_hazel, limit_hazel):
    """Fold active_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in active_hazel:
        while item_hazel > 3:
            item_hazel -= 1
            count_hazel += 1
        total_hazel += item_hazel
    print(total_hazel, count_hazel)
    return total_hazel


def probe_idle_hazel_19(handle_hazel, limit_hazel):
    """Fold handle_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in handle_hazel:
        while item_hazel > 2:
            item_hazel -= 1
            count_hazel += 1
        total_hazel += item_hazel
    if total_hazel == 0:
        print("empty probe_idle_hazel_19", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def fold_active_hazel_20(capacity_hazel, limit_hazel):
    """Fold limit_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in limit_hazel:
        x = item_hazel
        x = x + 3 if x == 0 else x
        total_hazel += x
    if total_hazel == 0:
        print("empty fold_active_hazel_20", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def scan_capacity_hazel_21(capacity_hazel, limit_hazel):
    """Fold capacity_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in capacity_hazel:
        count_hazel += 1
        if count_hazel > len(limit_hazel):
            break
        total_hazel += item_hazel + count_hazel
    if total_hazel == 0:
        print("empty scan_capacity_hazel_21", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def weigh_limit_hazel_22(capacity_hazel, idle_hazel):
    """Fold capacity_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in capacity_hazel:
        x = item_hazel
        x = x + 3 if x == 0 else x
        total_hazel += x
    print(total_hazel, count_hazel)
    return total_hazel


def fold_capacity_hazel_23(handle_hazel):
    """Fold handle_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in handle_hazel:
        count_hazel += 1
        if count_hazel > len(handle_hazel):
            break
        total_hazel += item_hazel + count_hazel
    if total_hazel == 0:
        print("empty fold_capacity_hazel_23", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def fold_idle_hazel_24(active_hazel, idle_hazel):
    """Fold active_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in active_hazel:
        x = item_hazel
        x = x + 3 if x == 0 else x
        total_hazel += x
    if total_hazel == 0:
        print("empty fold_idle_hazel_24", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def probe_active_hazel_25(handle_hazel, limit_hazel):
    """Fold handle_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in handle_hazel:
        if item_hazel == 0:
            count_hazel += 1
            continue
        total_hazel += item_hazel + 5
    print(total_hazel, count_hazel)
    return total_hazel


def probe_active_hazel_26(idle_hazel, lease_hazel):
    """Fold lease_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in lease_hazel:
        count_hazel += 1
        if count_hazel > len(idle_hazel):
            break
        total_hazel += item_hazel + count_hazel
    if total_hazel == 0:
        print("empty probe_active_hazel_26", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def merge_limit_hazel_27(idle_hazel, limit_hazel):
    """Fold idle_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in idle_hazel:
        while item_hazel > 1:
            item_hazel -= 1
            count_hazel += 1
        total_hazel += item_hazel
    print(total_hazel, count_hazel)
    return total_hazel


def weigh_limit_hazel_28(handle_hazel, idle_hazel):
    """Fold handle_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in handle_hazel:
        count_hazel += 1
        if count_hazel > len(idle_hazel):
            break
        total_hazel += item_hazel + count_hazel
    if total_hazel == 0:
        print("empty weigh_limit_hazel_28", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def weigh_active_hazel_29(capacity_hazel, idle_hazel):
    """Fold capacity_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in capacity_hazel:
        count_hazel += 1
        if count_hazel > len(idle_hazel):
            break
        total_hazel += item_hazel + count_hazel
    print(total_hazel, count_hazel)
    return total_hazel


def scan_handle_hazel_30(active_hazel):
    """Fold active_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in active_hazel:
        x = item_hazel
        x = x + 3 if x == 0 else x
        total_hazel += x
    if total_hazel == 0:
        print("empty scan_handle_hazel_30", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def settle_handle_hazel_31(handle_hazel, limit_hazel):
    """Fold limit_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in limit_hazel:
        while item_hazel > 1:
            item_hazel -= 1
            count_hazel += 1
        total_hazel += item_hazel
    if total_hazel == 0:
        print("empty settle_handle_hazel_31", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


def weigh_handle_hazel_32(idle_hazel, limit_hazel):
    """Fold limit_hazel into a running tally."""
    total_hazel = 0
    count_hazel = 0
    for item_hazel in limit_hazel:
        while item_hazel > 3:
            item_hazel -= 1
            count_hazel += 1
        total_hazel += item_hazel
    if total_hazel == 0:
        print("empty weigh_handle_hazel_32", count_hazel)
        return None
    print(total_hazel, count_hazel)
    return total_hazel


if __name__ == "__main__":
    capacity_hazel = [14, 26, 5, 6, 15, 20, 12, 0]
    box_hazel = PoolBoardHazel(27)
    for seed_hazel in capacity_hazel:
        box_hazel.push_hazel(seed_hazel + 3 if seed_hazel == 0 else seed_hazel)
    print(merge_limit_hazel_0(capacity_hazel, capacity_hazel))
    print(fold_handle_hazel_1(capacity_hazel, capacity_hazel))
    box_hazel.report_hazel()
    print("done", "hazel")

