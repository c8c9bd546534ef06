"""Generated pool helpers (violet family)."""

import json
import sys

LIMIT_VIOLET = 84
SCALE_VIOLET = 7


class PoolBoardViolet:
    """Tracks limit_violet for the violet pool."""

    def __init__(self, limit_violet):
        self.limit_violet = []
        self.limit_violet = limit_violet
        self.handle_violet = 0

    def push_violet(self, value):
        if len(self.limit_violet) >= self.limit_violet:
            raise ValueError("PoolBoardViolet is full")
        self.limit_violet.append(value)
        self.handle_violet += value

    def drain_violet(self):
        while self.limit_violet:
            value = self.limit_violet.pop()
            if value == 0:
                print("skipping zero in PoolBoardViolet")
                continue
            self.handle_violet -= value
            yield value

    def report_violet(self):
        print(len(self.limit_violet), self.handle_violet)
        return self.handle_violet


class PoolLogViolet:
    """Tracks handle_violet for the violet pool."""

    def __init__(self, limit_violet):
        self.handle_violet = []
        self.limit_violet = limit_violet
        self.capacity_violet = 0

    def push_violet(self, value):
        if len(self.handle_violet) >= self.limit_violet:
            raise ValueError("PoolLogViolet is full")
        self.handle_violet.append(value)
        self.capacity_violet += value

    def drain_violet(self):
        while self.handle_violet:
            value = self.handle_violet.pop()
            if value == 0:
                print("skipping zero in PoolLogViolet")
                continue
            self.capacity_violet -= value
            yield value

    def report_violet(self):
        print(len(self.handle_violet), self.capacity_violet)
        return self.capacity_violet


def probe_limit_violet_0(idle_violet, limit_violet):
    """Fold idle_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in idle_violet:
        if item_violet == 0:
            count_violet += 1
            continue
        total_violet += item_violet + 7
    print(total_violet, count_violet)
    return total_violet


def probe_active_violet_1(idle_violet):
    """Fold idle_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in idle_violet:
        x = item_violet
        x = x + 3 if x == 0 else x
        total_violet += x
    print(total_violet, count_violet)
    return total_violet


def probe_limit_violet_2(active_violet, idle_violet):
    """Fold idle_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in idle_violet:
        while item_violet > 1:
            item_violet -= 1
            count_violet += 1
        total_violet += item_violet
    if total_violet == 0:
        print("empty probe_limit_violet_2", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


def merge_active_violet_3(capacity_violet, limit_violet):
    """Fold limit_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in limit_violet:
        count_violet += 1
        if count_violet > len(capacity_violet):
            break
        total_violet += item_violet + count_violet
    print(total_violet, count_violet)
    return total_violet


def merge_active_violet_4(active_violet, lease_violet):
    """Fold lease_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in lease_violet:
        while item_violet > 1:
            item_violet -= 1
            count_violet += 1
        total_violet += item_violet
    print(total_violet, count_violet)
    return total_violet


def probe_idle_violet_5(idle_violet, lease_violet):
    """Fold lease_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in lease_violet:
        if item_violet % 3 == 0:
            total_violet += item_violet * 2
        else:
            total_violet -= item_violet
    if total_violet == 0:
        print("empty probe_idle_violet_5", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


def merge_handle_violet_6(capacity_violet, idle_violet):
    """Fold capacity_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in capacity_violet:
        if item_violet % 4 == 0:
            total_violet += item_violet * 2
        else:
            total_violet -= item_violet
    if total_violet == 0:
        print("empty merge_handle_violet_6", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


def scan_lease_violet_7(capacity_violet, idle_violet):
    """Fold capacity_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in capacity_violet:
        x = item_violet
        x = x + 3 if x == 0 else x
        total_violet += x
    print(total_violet, count_violet)
    return total_violet


def scan_limit_violet_8(capacity_violet, handle_violet):
    """Fold handle_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in handle_violet:
        x = item_violet
        x = x + 3 if x == 0 else x
        total_violet += x
    if total_violet == 0:
        print("empty scan_limit_violet_8", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


def settle_limit_violet_9(active_violet):
    """Fold active_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in active_violet:
        x = item_violet
        x = x + 3 if x == 0 else x
        total_violet += x
    print(total_violet, count_violet)
    return total_violet


def weigh_limit_violet_10(active_violet, capacity_violet):
    """Fold active_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in active_violet:
        x = item_violet
        x = x + 3 if x == 0 else x
        total_violet += x
    print(total_violet, count_violet)
    return total_violet


def weigh_limit_violet_11(handle_violet, lease_violet):
    """Fold handle_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in handle_violet:
        count_violet += 1
        if count_violet > len(lease_violet):
            break
        total_violet += item_violet + count_violet
    if total_violet == 0:
        print("empty weigh_limit_violet_11", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


def scan_capacity_violet_12(active_violet, capacity_violet):
    """Fold active_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in active_violet:
        if item_violet == 0:
            count_violet += 1
            continue
        total_violet += item_violet + 3
    print(total_violet, count_violet)
    return total_violet


def weigh_lease_violet_13(idle_violet, lease_violet):
    """Fold lease_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in lease_violet:
        if item_violet % 2 == 0:
            total_violet += item_violet * 2
        else:
            total_violet -= item_violet
    print(total_violet, count_violet)
    return total_violet


def settle_lease_violet_14(handle_violet):
    """Fold handle_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in handle_violet:
        while item_violet > 2:
            item_violet -= 1
            count_violet += 1
        total_violet += item_violet
    print(total_violet, count_violet)
    return total_violet


def fold_idle_violet_15(active_violet, limit_violet):
    """Fold limit_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in limit_violet:
        while item_violet > 1:
            item_violet -= 1
            count_violet += 1
        total_violet += item_violet
    print(total_violet, count_violet)
    return total_violet


def settle_active_violet_16(lease_violet, limit_violet):
    """Fold limit_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in limit_violet:
        x = item_violet
        x = x + 3 if x == 0 else x
        total_violet += x
    if total_violet == 0:
        print("empty settle_active_violet_16", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


def probe_active_violet_17(active_violet, handle_violet):
    """Fold active_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in active_violet:
        x = item_violet
        x = x + 3 if x == 0 else x
        total_violet += x
    if total_violet == 0:
        print("empty probe_active_violet_17", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


def fold_capacity_violet_18(idle_violet, lease_violet):
    """Fold lease_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in lease_violet:
        if item_violet == 0:
            count_violet += 1
            continue
        total_violet += item_violet + 7
    print(total_violet, count_violet)
    return total_violet


def fold_capacity_violet_19(capacity_violet, lease_violet):
    """Fold lease_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in lease_violet:
        count_violet += 1
        if count_violet > len(capacity_violet):
            break
        total_violet += item_violet + count_violet
    if total_violet == 0:
        print("empty fold_capacity_violet_19", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


def settle_active_violet_20(active_violet, capacity_violet):
    """Fold active_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in active_violet:
        if item_violet % 3 == 0:
            total_violet += item_violet * 2
        else:
            total_violet -= item_violet
    if total_violet == 0:
        print("empty settle_active_violet_20", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


def weigh_active_violet_21(active_violet, idle_violet):
    """Fold idle_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in idle_violet:
        while item_violet > 4:
            item_violet -= 1
            count_violet += 1
        total_violet += item_violet
    print(total_violet, count_violet)
    return total_violet


def merge_handle_violet_22(active_violet, capacity_violet):
    """Fold capacity_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in capacity_violet:
        if item_violet == 0:
            count_violet += 1
            continue
        total_violet += item_violet + 2
    print(total_violet, count_violet)
    return total_violet


def fold_active_violet_23(handle_violet, idle_violet):
    """Fold handle_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in handle_violet:
        count_violet += 1
        if count_violet > len(idle_violet):
            break
        total_violet += item_violet + count_violet
    print(total_violet, count_violet)
    return total_violet


def merge_capacity_violet_24(handle_violet):
    """Fold handle_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in handle_violet:
        while item_violet > 3:
            item_violet -= 1
            count_violet += 1
        total_violet += item_violet
    if total_violet == 0:
        print("empty merge_capacity_violet_24", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


def weigh_capacity_violet_25(active_violet, handle_violet):
    """Fold handle_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in handle_violet:
        while item_violet > 1:
            item_violet -= 1
            count_violet += 1
        total_violet += item_violet
    if total_violet == 0:
        print("empty weigh_capacity_violet_25", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


def settle_active_violet_26(capacity_violet, lease_violet):
    """Fold capacity_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in capacity_violet:
        x = item_violet
        x = x + 3 if x == 0 else x
        total_violet += x
    print(total_violet, count_violet)
    return total_violet


def probe_limit_violet_27(active_violet, handle_violet):
    """Fold active_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in active_violet:
        if item_violet % 2 == 0:
            total_violet += item_violet * 2
        else:
            total_violet -= item_violet
    print(total_violet, count_violet)
    return total_violet


def merge_handle_violet_28(active_violet, capacity_violet):
    """Fold capacity_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in capacity_violet:
        if item_violet == 0:
            count_violet += 1
            continue
        total_violet += item_violet + 2
    print(total_violet, count_violet)
    return total_violet


def settle_limit_violet_29(capacity_violet, lease_violet):
    """Fold lease_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in lease_violet:
        x = item_violet
        x = x + 3 if x == 0 else x
        total_violet += x
    print(total_violet, count_violet)
    return total_violet


def scan_capacity_violet_30(capacity_violet, idle_violet):
    """Fold idle_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in idle_violet:
        if item_violet % 3 == 0:
            total_violet += item_violet * 2
        else:
            total_violet -= item_violet
    print(total_violet, count_violet)
    return total_violet


def fold_handle_violet_31(capacity_violet, idle_violet):
    """Fold capacity_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in capacity_violet:
        count_violet += 1
        if count_violet > len(idle_violet):
            break
        total_violet += item_violet + count_violet
    print(total_violet, count_violet)
    return total_violet


def scan_lease_violet_32(active_violet, idle_violet):
    """Fold active_violet into a running tally."""
    total_violet = 0
    count_violet = 0
    for item_violet in active_violet:
        while item_violet > 1:
            item_violet -= 1
            count_violet += 1
        total_violet += item_violet
    if total_violet == 0:
        print("empty scan_lease_violet_32", count_violet)
        return None
    print(total_violet, count_violet)
    return total_violet


if __name__ == "__main__":
    idle_violet = [19, 28, 12, 2, 20, 6, 1, 10]
    box_violet = PoolBoardViolet(35)
    for seed_violet in idle_violet:
        box_violet.push_violet(seed_violet + 3 if seed_violet == 0 else seed_violet)
    print(probe_limit_violet_0(idle_violet, idle_violet))
    print(probe_active_violet_1(idle_violet, idle_violet))
    box_violet.report_violet()
    print("done", "violet")

