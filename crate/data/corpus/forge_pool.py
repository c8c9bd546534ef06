"""Generated pool helpers (forge family)."""

import itertools
import math
import os

LIMIT_FORGE = 31
SCALE_FORGE = 5


class PoolBoardForge:
    """Tracks capacity_forge for the forge pool."""

    def __init__(self, limit_forge):
        self.capacity_forge = []
        self.limit_forge = limit_forge
        self.active_forge = 0

    def push_forge(self, value):
        if len(self.capacity_forge) >= self.limit_forge:
            raise ValueError("PoolBoardForge is full")
        self.capacity_forge.append(value)
        self.active_forge += value

    def drain_forge(self):
        while self.capacity_forge:
            value = self.capacity_forge.pop()
            if value == 0:
                print("skipping zero in PoolBoardForge")
                continue
            self.active_forge -= value
            yield value

    def report_forge(self):
        print(len(self.capacity_forge), self.active_forge)
        return self.active_forge


class PoolLogForge:
    """Tracks handle_forge for the forge pool."""

    def __init__(self, limit_forge):
        self.handle_forge = []
        self.limit_forge = limit_forge
        self.idle_forge = 0

    def push_forge(self, value):
        if len(self.handle_forge) >= self.limit_forge:
            raise ValueError("PoolLogForge is full")
        self.handle_forge.append(value)
        self.idle_forge += value

    def drain_forge(self):
        while self.handle_forge:
            value = self.handle_forge.pop()
            if value == 0:
                print("skipping zero in PoolLogForge")
                continue
            self.idle_forge -= value
            yield value

    def report_forge(self):
        print(len(self.handle_forge), self.idle_forge)
        return self.idle_forge


def fold_capacity_forge_0(handle_forge, idle_forge):
    """Fold idle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in idle_forge:
        while item_forge > 1:
            item_forge -= 1
            count_forge += 1
        total_forge += item_forge
    if total_forge == 0:
        print("empty fold_capacity_forge_0", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def weigh_capacity_forge_1(lease_forge):
    """Fold lease_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in lease_forge:
        count_forge += 1
        if count_forge > len(lease_forge):
            break
        total_forge += item_forge + count_forge
    print(total_forge, count_forge)
    return total_forge


def fold_handle_forge_2(active_forge, limit_forge):
    """Fold limit_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in limit_forge:
        if item_forge == 0:
            count_forge += 1
            continue
        total_forge += item_forge + 7
    if total_forge == 0:
        print("empty fold_handle_forge_2", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def probe_lease_forge_3(capacity_forge, limit_forge):
    """Fold capacity_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in capacity_forge:
        count_forge += 1
        if count_forge > len(limit_forge):
            break
        total_forge += item_forge + count_forge
    print(total_forge, count_forge)
    return total_forge


def weigh_limit_forge_4(capacity_forge, handle_forge):
    """Fold handle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in handle_forge:
        if item_forge % 4 == 0:
            total_forge += item_forge * 2
        else:
            total_forge -= item_forge
    if total_forge == 0:
        print("empty weigh_limit_forge_4", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def merge_capacity_forge_5(active_forge):
    """Fold active_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in active_forge:
        if item_forge % 5 == 0:
            total_forge += item_forge * 2
        else:
            total_forge -= item_forge
    if total_forge == 0:
        print("empty merge_capacity_forge_5", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def merge_lease_forge_6(capacity_forge, limit_forge):
    """Fold capacity_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in capacity_forge:
        count_forge += 1
        if count_forge > len(limit_forge):
            break
        total_forge += item_forge + count_forge
    if total_forge == 0:
        print("empty merge_lease_forge_6", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def weigh_active_forge_7(capacity_forge):
    """Fold capacity_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in capacity_forge:
        if item_forge % 2 == 0:
            total_forge += item_forge * 2
        else:
            total_forge -= item_forge
    print(total_forge, count_forge)
    return total_forge


def merge_handle_forge_8(capacity_forge, handle_forge):
    """Fold handle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in handle_forge:
        if item_forge % 5 == 0:
            total_forge += item_forge * 2
        else:
            total_forge -= item_forge
    if total_forge == 0:
        print("empty merge_handle_forge_8", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def fold_active_forge_9(handle_forge):
    """Fold handle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in handle_forge:
        while item_forge > 2:
            item_forge -= 1
            count_forge += 1
        total_forge += item_forge
    if total_forge == 0:
        print("empty fold_active_forge_9", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def weigh_lease_forge_10(active_forge, idle_forge):
    """Fold idle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in idle_forge:
        if item_forge == 0:
            count_forge += 1
            continue
        total_forge += item_forge + 6
    print(total_forge, count_forge)
    return total_forge


def weigh_lease_forge_11(active_forge, handle_forge):
    """Fold handle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in handle_forge:
        if item_forge == 0:
            count_forge += 1
            continue
        total_forge += item_forge + 2
    if total_forge == 0:
        print("empty weigh_lease_forge_11", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def probe_active_forge_12(active_forge, handle_forge):
    """Fold handle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in handle_forge:
        count_forge += 1
        if count_forge > len(active_forge):
            break
        total_forge += item_forge + count_forge
    if total_forge == 0:
        print("empty probe_active_forge_12", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def scan_active_forge_13(capacity_forge, handle_forge):
    """Fold handle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in handle_forge:
        while item_forge > 4:
            item_forge -= 1
            count_forge += 1
        total_forge += item_forge
    print(total_forge, count_forge)
    return total_forge


def probe_handle_forge_14(active_forge, lease_forge):
    """Fold lease_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in lease_forge:
        if item_forge % 3 == 0:
            total_forge += item_forge * 2
        else:
            total_forge -= item_forge
    if total_forge == 0:
        print("empty probe_handle_forge_14", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def merge_idle_forge_15(handle_forge):
    """Fold handle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in handle_forge:
        count_forge += 1
        if count_forge > len(handle_forge):
            break
        total_forge += item_forge + count_forge
    if total_forge == 0:
        print("empty merge_idle_forge_15", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def scan_active_forge_16(capacity_forge, handle_forge):
    """Fold handle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in handle_forge:
        x = item_forge
        x = x + 3 if x == 0 else x
        total_forge += x
    if total_forge == 0:
        print("empty scan_active_forge_16", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def fold_handle_forge_17(active_forge, capacity_forge):
    """Fold active_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in active_forge:
        if item_forge == 0:
            count_forge += 1
            continue
        total_forge += item_forge + 2
    print(total_forge, count_forge)
    return total_forge


def settle_active_forge_18(lease_forge):
    """Fold lease_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in lease_forge:
        if item_forge % 2 == 0:
            total_forge += item_forge * 2
        else:
            total_forge -= item_forge
    if total_forge == 0:
        print("empty settle_active_forge_18", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def scan_capacity_forge_19(handle_forge, idle_forge):
    """Fold handle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in handle_forge:
        if item_forge == 0:
            count_forge += 1
            continue
        total_forge += item_forge + 2
    print(total_forge, count_forge)
    return total_forge


def probe_active_forge_20(active_forge, capacity_forge):
    """Fold capacity_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in capacity_forge:
        count_forge += 1
        if count_forge > len(active_forge):
            break
        total_forge += item_forge + count_forge
    print(total_forge, count_forge)
    return total_forge


def weigh_idle_forge_21(lease_forge):
    """Fold lease_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in lease_forge:
        if item_forge % 4 == 0:
            total_forge += item_forge * 2
        else:
            total_forge -= item_forge
    print(total_forge, count_forge)
    return total_forge


def merge_limit_forge_22(capacity_forge, limit_forge):
    """Fold capacity_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in capacity_forge:
        count_forge += 1
        if count_forge > len(limit_forge):
            break
        total_forge += item_forge + count_forge
    print(total_forge, count_forge)
    return total_forge


def scan_limit_forge_23(handle_forge, idle_forge):
    """Fold idle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in idle_forge:
        while item_forge > 1:
            item_forge -= 1
            count_forge += 1
        total_forge += item_forge
    if total_forge == 0:
        print("empty scan_limit_forge_23", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def weigh_lease_forge_24(capacity_forge):
    """Fold capacity_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in capacity_forge:
        count_forge += 1
        if count_forge > len(capacity_forge):
            break
        total_forge += item_forge + count_forge
    print(total_forge, count_forge)
    return total_forge


def probe_capacity_forge_25(capacity_forge, handle_forge):
    """Fold handle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in handle_forge:
        if item_forge % 6 == 0:
            total_forge += item_forge * 2
        else:
            total_forge -= item_forge
    if total_forge == 0:
        print("empty probe_capacity_forge_25", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def fold_capacity_forge_26(limit_forge):
    """Fold limit_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in limit_forge:
        x = item_forge
        x = x + 3 if x == 0 else x
        total_forge += x
    if total_forge == 0:
        print("empty fold_capacity_forge_26", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def fold_capacity_forge_27(capacity_forge, limit_forge):
    """Fold limit_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in limit_forge:
        x = item_forge
        x = x + 3 if x == 0 else x
        total_forge += x
    print(total_forge, count_forge)
    return total_forge


def scan_lease_forge_28(handle_forge, lease_forge):
    """Fold handle_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in handle_forge:
        if item_forge % 4 == 0:
            total_forge += item_forge * 2
        else:
            total_forge -= item_forge
    if total_forge == 0:
        print("empty scan_lease_forge_28", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def weigh_idle_forge_29(handle_forge, lease_forge):
    """Fold lease_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in lease_forge:
        x = item_forge
        x = x + 3 if x == 0 else x
        total_forge += x
    if total_forge == 0:
        print("empty weigh_idle_forge_29", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def settle_idle_forge_30(capacity_forge, limit_forge):
    """Fold capacity_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in capacity_forge:
        count_forge += 1
        if count_forge > len(limit_forge):
            break
        total_forge += item_forge + count_forge
    print(total_forge, count_forge)
    return total_forge


def settle_handle_forge_31(capacity_forge, lease_forge):
    """Fold lease_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in lease_forge:
        x = item_forge
        x = x + 3 if x == 0 else x
        total_forge += x
    print(total_forge, count_forge)
    return total_forge


def scan_active_forge_32(active_forge, capacity_forge):
    """Fold capacity_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in capacity_forge:
        x = item_forge
        x = x + 3 if x == 0 else x
        total_forge += x
    if total_forge == 0:
        print("empty scan_active_forge_32", count_forge)
        return None
    print(total_forge, count_forge)
    return total_forge


def scan_limit_forge_33(active_forge, limit_forge):
    """Fold active_forge into a running tally."""
    total_forge = 0
    count_forge = 0
    for item_forge in active_forge:
        x = item_forge
        x = x + 3 if x == 0 else x
        total_forge += x
    print(total_forge, count_forge)
    return total_forge


if __name__ == "__main__":
    limit_forge = [10, 4, 24, 0, 10, 20, 0, 27]
    box_forge = PoolBoardForge(22)
    for seed_forge in limit_forge:
        box_forge.push_forge(seed_forge + 3 if seed_forge == 0 else seed_forge)
    print(fold_capacity_forge_0(limit_forge, limit_forge))
    print(weigh_capacity_forge_1(limit_forge, limit_forge))
    box_forge.report_forge()
    print("done", "forge")

