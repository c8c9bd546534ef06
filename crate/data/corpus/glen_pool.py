"""Generated pool helpers (glen family)."""

from collections import defaultdict
from collections import deque

LIMIT_GLEN = 110
SCALE_GLEN = 11


class PoolBoardGlen:
    """Tracks active_glen for the glen pool."""

    def __init__(self, limit_glen):
        self.active_glen = []
        self.limit_glen = limit_glen
        self.idle_glen = 0

    def push_glen(self, value):
        if len(self.active_glen) >= self.limit_glen:
            raise ValueError("PoolBoardGlen is full")
        self.active_glen.append(value)
        self.idle_glen += value

    def drain_glen(self):
        while self.active_glen:
            value = self.active_glen.pop()
            if value == 0:
                print("skipping zero in PoolBoardGlen")
                continue
            self.idle_glen -= value
            yield value

    def report_glen(self):
        print(len(self.active_glen), self.idle_glen)
        return self.idle_glen


class PoolLogGlen:
    """Tracks active_glen for the glen pool."""

    def __init__(self, limit_glen):
        self.active_glen = []
        self.limit_glen = limit_glen
        self.idle_glen = 0

    def push_glen(self, value):
        if len(self.active_glen) >= self.limit_glen:
            raise ValueError("PoolLogGlen is full")
        self.active_glen.append(value)
        self.idle_glen += value

    def drain_glen(self):
        while self.active_glen:
            value = self.active_glen.pop()
            if value == 0:
                print("skipping zero in PoolLogGlen")
                continue
            self.idle_glen -= value
            yield value

    def report_glen(self):
        print(len(self.active_glen), self.idle_glen)
        return self.idle_glen


def settle_capacity_glen_0(active_glen, lease_glen):
    """Fold active_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in active_glen:
        count_glen += 1
        if count_glen > len(lease_glen):
            break
        total_glen += item_glen + count_glen
    print(total_glen, count_glen)
    return total_glen


def weigh_limit_glen_1(capacity_glen, idle_glen):
    """Fold capacity_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in capacity_glen:
        if item_glen % 5 == 0:
            total_glen += item_glen * 2
        else:
            total_glen -= item_glen
    print(total_glen, count_glen)
    return total_glen


def settle_idle_glen_2(handle_glen, idle_glen):
    """Fold handle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in handle_glen:
        if item_glen == 0:
            count_glen += 1
            continue
        total_glen += item_glen + 3
    print(total_glen, count_glen)
    return total_glen


def settle_handle_glen_3(active_glen, lease_glen):
    """Fold active_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in active_glen:
        count_glen += 1
        if count_glen > len(lease_glen):
            break
        total_glen += item_glen + count_glen
    print(total_glen, count_glen)
    return total_glen


def weigh_lease_glen_4(lease_glen, limit_glen):
    """Fold lease_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in lease_glen:
        while item_glen > 1:
            item_glen -= 1
            count_glen += 1
        total_glen += item_glen
    if total_glen == 0:
        print("empty weigh_lease_glen_4", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def settle_idle_glen_5(active_glen, idle_glen):
    """Fold active_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in active_glen:
        x = item_glen
        x = x + 3 if x == 0 else x
        total_glen += x
    if total_glen == 0:
        print("empty settle_idle_glen_5", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def merge_active_glen_6(idle_glen, limit_glen):
    """Fold idle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in idle_glen:
        while item_glen > 3:
            item_glen -= 1
            count_glen += 1
        total_glen += item_glen
    print(total_glen, count_glen)
    return total_glen


def weigh_limit_glen_7(handle_glen, limit_glen):
    """Fold handle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in handle_glen:
        if item_glen == 0:
            count_glen += 1
            continue
        total_glen += item_glen + 6
    print(total_glen, count_glen)
    return total_glen


def fold_idle_glen_8(handle_glen, limit_glen):
    """Fold handle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in handle_glen:
        x = item_glen
        x = x + 3 if x == 0 else x
        total_glen += x
    if total_glen == 0:
        print("empty fold_idle_glen_8", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def settle_handle_glen_9(capacity_glen, limit_glen):
    """Fold capacity_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in capacity_glen:
        while item_glen > 4:
            item_glen -= 1
            count_glen += 1
        total_glen += item_glen
    print(total_glen, count_glen)
    return total_glen


def weigh_idle_glen_10(active_glen, idle_glen):
    """Fold idle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in idle_glen:
        while item_glen > 4:
            item_glen -= 1
            count_glen += 1
        total_glen += item_glen
    if total_glen == 0:
        print("empty weigh_idle_glen_10", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def scan_idle_glen_11(active_glen, idle_glen):
    """Fold active_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in active_glen:
        while item_glen > 1:
            item_glen -= 1
            count_glen += 1
        total_glen += item_glen
    if total_glen == 0:
        print("empty scan_idle_glen_11", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def weigh_idle_glen_12(active_glen, capacity_glen):
    """Fold capacity_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in capacity_glen:
        while item_glen > 3:
            item_glen -= 1
            count_glen += 1
        total_glen += item_glen
    print(total_glen, count_glen)
    return total_glen


def weigh_capacity_glen_13(active_glen, idle_glen):
    """Fold idle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in idle_glen:
        if item_glen % 3 == 0:
            total_glen += item_glen * 2
        else:
            total_glen -= item_glen
    print(total_glen, count_glen)
    return total_glen


def merge_limit_glen_14(active_glen, lease_glen):
    """Fold lease_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in lease_glen:
        if item_glen == 0:
            count_glen += 1
            continue
        total_glen += item_glen + 5
    if total_glen == 0:
        print("empty merge_limit_glen_14", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def weigh_idle_glen_15(handle_glen, idle_glen):
    """Fold handle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in handle_glen:
        if item_glen % 3 == 0:
            total_glen += item_glen * 2
        else:
            total_glen -= item_glen
    if total_glen == 0:
        print("empty weigh_idle_glen_15", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def weigh_idle_glen_16(active_glen, capacity_glen):
    """Fold active_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in active_glen:
        x = item_glen
        x = x + 3 if x == 0 else x
        total_glen += x
    print(total_glen, count_glen)
    return total_glen


def scan_active_glen_17(capacity_glen, handle_glen):
    """Fold capacity_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in capacity_glen:
        x = item_glen
        x = x + 3 if x == 0 else x
        total_glen += x
    print(total_glen, count_glen)
    return total_glen


def fold_capacity_glen_18(handle_glen, idle_glen):
    """Fold idle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in idle_glen:
        count_glen += 1
        if count_glen > len(handle_glen):
            break
        total_glen += item_glen + count_glen
    if total_glen == 0:
        print("empty fold_capacity_glen_18", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def merge_lease_glen_19(active_glen, idle_glen):
    """Fold idle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in idle_glen:
        if item_glen % 2 == 0:
            total_glen += item_glen * 2
        else:
            total_glen -= item_glen
    print(total_glen, count_glen)
    return total_glen


def merge_handle_glen_20(active_glen, handle_glen):
    """Fold handle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in handle_glen:
        if item_glen == 0:
            count_glen += 1
            continue
        total_glen += item_glen + 5
    if total_glen == 0:
        print("empty merge_handle_glen_20", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def merge_idle_glen_21(handle_glen, idle_glen):
    """Fold idle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in idle_glen:
        if item_glen % 5 == 0:
            total_glen += item_glen * 2
        else:
            total_glen -= item_glen
    print(total_glen, count_glen)
    return total_glen


def probe_active_glen_22(active_glen, handle_glen):
    """Fold handle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in handle_glen:
        while item_glen > 4:
            item_glen -= 1
            count_glen += 1
        total_glen += item_glen
    print(total_glen, count_glen)
    return total_glen


def weigh_lease_glen_23(handle_glen, lease_glen):
    """Fold handle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in handle_glen:
        count_glen += 1
        if count_glen > len(lease_glen):
            break
        total_glen += item_glen + count_glen
    print(total_glen, count_glen)
    return total_glen


def fold_active_glen_24(capacity_glen):
    """Fold capacity_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in capacity_glen:
        if item_glen == 0:
            count_glen += 1
            continue
        total_glen += item_glen + 6
    if total_glen == 0:
        print("empty fold_active_glen_24", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def settle_capacity_glen_25(idle_glen, lease_glen):
    """Fold idle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in idle_glen:
        if item_glen % 4 == 0:
            total_glen += item_glen * 2
        else:
            total_glen -= item_glen
    print(total_glen, count_glen)
    return total_glen


def weigh_limit_glen_26(lease_glen, limit_glen):
    """Fold limit_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in limit_glen:
        count_glen += 1
        if count_glen > len(lease_glen):
            break
        total_glen += item_glen + count_glen
    if total_glen == 0:
        print("empty weigh_limit_glen_26", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def probe_lease_glen_27(handle_glen, lease_glen):
    """Fold handle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in handle_glen:
        x = item_glen
        x = x + 3 if x == 0 else x
        total_glen += x
    print(total_glen, count_glen)
    return total_glen


def scan_lease_glen_28(idle_glen, lease_glen):
    """Fold idle_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in idle_glen:
        if item_glen == 0:
            count_glen += 1
            continue
        total_glen += item_glen + 4
    if total_glen == 0:
        print("empty scan_lease_glen_28", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


def merge_lease_glen_29(capacity_glen):
    """Fold capacity_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in capacity_glen:
        while item_glen > 4:
            item_glen -= 1
            count_glen += 1
        total_glen += item_glen
    print(total_glen, count_glen)
    return total_glen


def probe_handle_glen_30(handle_glen, lease_glen):
    """Fold lease_glen into a running tally."""
    total_glen = 0
    count_glen = 0
    for item_glen in lease_glen:
        count_glen += 1
        if count_glen > len(handle_glen):
            break
        total_glen += item_glen + count_glen
    if total_glen == 0:
        print("empty probe_handle_glen_30", count_glen)
        return None
    print(total_glen, count_glen)
    return total_glen


if __name__ == "__main__":
    limit_glen = [13, 25, 7, 26, 17, 7, 26, 24]
    box_glen = PoolBoardGlen(27)
    for seed_glen in limit_glen:
        box_glen.push_glen(seed_glen + 3 if seed_glen == 0 else seed_glen)
    print(settle_capacity_glen_0(limit_glen, limit_glen))
    print(weigh_limit_glen_1(limit_glen, limit_glen))
    box_glen.report_glen()
    print("done", "glen")

