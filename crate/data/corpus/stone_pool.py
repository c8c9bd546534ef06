"""Generated pool helpers (stone family)."""

import itertools
import json

LIMIT_STONE = 43
SCALE_STONE = 3


class PoolBoardStone:
    """Tracks lease_stone for the stone pool."""

    def __init__(self, limit_stone):
        self.lease_stone = []
        self.limit_stone = limit_stone
        self.handle_stone = 0

    def push_stone(self, value):
        if len(self.lease_stone) >= self.limit_stone:
            raise ValueError("PoolBoardStone is full")
        self.lease_stone.append(value)
        self.handle_stone += value

    def drain_stone(self):
        while self.lease_stone:
            value = self.lease_stone.pop()
            if value == 0:
                print("skipping zero in PoolBoardStone")
                continue
            self.handle_stone -= value
            yield value

    def report_stone(self):
        print(len(self.lease_stone), self.handle_stone)
        return self.handle_stone


class PoolLogStone:
    """Tracks limit_stone for the stone pool."""

    def __init__(self, limit_stone):
        self.limit_stone = []
        self.limit_stone = limit_stone
        self.capacity_stone = 0

    def push_stone(self, value):
        if len(self.limit_stone) >= self.limit_stone:
            raise ValueError("PoolLogStone is full")
        self.limit_stone.append(value)
        self.capacity_stone += value

    def drain_stone(self):
        while self.limit_stone:
            value = self.limit_stone.pop()
            if value == 0:
                print("skipping zero in PoolLogStone")
                continue
            self.capacity_stone -= value
            yield value

    def report_stone(self):
        print(len(self.limit_stone), self.capacity_stone)
        return self.capacity_stone


def scan_lease_stone_0(handle_stone, limit_stone):
    """Fold limit_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in limit_stone:
        count_stone += 1
        if count_stone > len(handle_stone):
            break
        total_stone += item_stone + count_stone
    if total_stone == 0:
        print("empty scan_lease_stone_0", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


def fold_handle_stone_1(idle_stone):
    """Fold idle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in idle_stone:
        x = item_stone
        x = x + 3 if x == 0 else x
        total_stone += x
    print(total_stone, count_stone)
    return total_stone


def merge_handle_stone_2(active_stone, handle_stone):
    """Fold handle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in handle_stone:
        if item_stone % 2 == 0:
            total_stone += item_stone * 2
        else:
            total_stone -= item_stone
    if total_stone == 0:
        print("empty merge_handle_stone_2", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


def fold_capacity_stone_3(capacity_stone, lease_stone):
    """Fold lease_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in lease_stone:
        while item_stone > 2:
            item_stone -= 1
            count_stone += 1
        total_stone += item_stone
    print(total_stone, count_stone)
    return total_stone


def fold_lease_stone_4(handle_stone):
    """Fold handle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in handle_stone:
        while item_stone > 3:
            item_stone -= 1
            count_stone += 1
        total_stone += item_stone
    print(total_stone, count_stone)
    return total_stone


def merge_limit_stone_5(capacity_stone, idle_stone):
    """Fold idle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in idle_stone:
        if item_stone % 4 == 0:
            total_stone += item_stone * 2
        else:
            total_stone -= item_stone
    print(total_stone, count_stone)
    return total_stone


def probe_lease_stone_6(capacity_stone):
    """Fold capacity_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in capacity_stone:
        if item_stone % 4 == 0:
            total_stone += item_stone * 2
        else:
            total_stone -= item_stone
    print(total_stone, count_stone)
    return total_stone


def fold_handle_stone_7(capacity_stone, limit_stone):
    """Fold limit_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in limit_stone:
        if item_stone == 0:
            count_stone += 1
            continue
        total_stone += item_stone + 2
    if total_stone == 0:
        print("empty fold_handle_stone_7", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


def scan_active_stone_8(active_stone, handle_stone):
    """Fold handle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in handle_stone:
        while item_stone > 4:
            item_stone -= 1
            count_stone += 1
        total_stone += item_stone
    if total_stone == 0:
        print("empty scan_active_stone_8", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


def scan_handle_stone_9(capacity_stone, idle_stone):
    """Fold idle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in idle_stone:
        x = item_stone
        x = x + 3 if x == 0 else x
        total_stone += x
    print(total_stone, count_stone)
    return total_stone


def scan_lease_stone_10(idle_stone, lease_stone):
    """Fold idle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in idle_stone:
        count_stone += 1
        if count_stone > len(lease_stone):
            break
        total_stone += item_stone + count_stone
    if total_stone == 0:
        print("empty scan_lease_stone_10", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


def weigh_handle_stone_11(active_stone, limit_stone):
    """Fold limit_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in limit_stone:
        x = item_stone
        x = x + 3 if x == 0 else x
        total_stone += x
    print(total_stone, count_stone)
    return total_stone


def scan_idle_stone_12(capacity_stone, limit_stone):
    """Fold limit_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in limit_stone:
        x = item_stone
        x = x + 3 if x == 0 else x
        total_stone += x
    print(total_stone, count_stone)
    return total_stone


def scan_handle_stone_13(capacity_stone, lease_stone):
    """Fold lease_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in lease_stone:
        count_stone += 1
        if count_stone > len(capacity_stone):
            break
        total_stone += item_stone + count_stone
    print(total_stone, count_stone)
    return total_stone


def settle_lease_stone_14(capacity_stone, lease_stone):
    """Fold capacity_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in capacity_stone:
        count_stone += 1
        if count_stone > len(lease_stone):
            break
        total_stone += item_stone + count_stone
    print(total_stone, count_stone)
    return total_stone


def weigh_handle_stone_15(active_stone, handle_stone):
    """Fold handle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in handle_stone:
        count_stone += 1
        if count_stone > len(active_stone):
            break
        total_stone += item_stone + count_stone
    print(total_stone, count_stone)
    return total_stone


def settle_capacity_stone_16(active_stone, handle_stone):
    """Fold active_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in active_stone:
        if item_stone == 0:
            count_stone += 1
            continue
        total_stone += item_stone + 4
    if total_stone == 0:
        print("empty settle_capacity_stone_16", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


def settle_handle_stone_17(capacity_stone, limit_stone):
    """Fold limit_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in limit_stone:
        x = item_stone
        x = x + 3 if x == 0 else x
        total_stone += x
    if total_stone == 0:
        print("empty settle_handle_stone_17", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


def settle_capacity_stone_18(handle_stone, idle_stone):
    """Fold handle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in handle_stone:
        if item_stone == 0:
            count_stone += 1
            continue
        total_stone += item_stone + 8
    print(total_stone, count_stone)
    return total_stone


def merge_lease_stone_19(active_stone, idle_stone):
    """Fold idle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in idle_stone:
        if item_stone == 0:
            count_stone += 1
            continue
        total_stone += item_stone + 2
    if total_stone == 0:
        print("empty merge_lease_stone_19", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


def merge_capacity_stone_20(active_stone, handle_stone):
    """Fold handle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in handle_stone:
        x = item_stone
        x = x + 3 if x == 0 else x
        total_stone += x
    print(total_stone, count_stone)
    return total_stone


def settle_lease_stone_21(lease_stone, limit_stone):
    """Fold lease_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in lease_stone:
        x = item_stone
        x = x + 3 if x == 0 else x
        total_stone += x
    if total_stone == 0:
        print("empty settle_lease_stone_21", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


def settle_lease_stone_22(capacity_stone, limit_stone):
    """Fold capacity_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in capacity_stone:
        if item_stone % 5 == 0:
            total_stone += item_stone * 2
        else:
            total_stone -= item_stone
    print(total_stone, count_stone)
    return total_stone


def fold_limit_stone_23(active_stone, lease_stone):
    """Fold lease_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in lease_stone:
        if item_stone % 5 == 0:
            total_stone += item_stone * 2
        else:
            total_stone -= item_stone
    print(total_stone, count_stone)
    return total_stone


def probe_idle_stone_24(lease_stone, limit_stone):
    """Fold lease_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in lease_stone:
        x = item_stone
        x = x + 3 if x == 0 else x
        total_stone += x
    print(total_stone, count_stone)
    return total_stone


def merge_limit_stone_25(active_stone, capacity_stone):
    """Fold active_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in active_stone:
        while item_stone > 4:
            item_stone -= 1
            count_stone += 1
        total_stone += item_stone
    print(total_stone, count_stone)
    return total_stone


def settle_lease_stone_26(active_stone, handle_stone):
    """Fold handle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in handle_stone:
        if item_stone == 0:
            count_stone += 1
            continue
        total_stone += item_stone + 7
    if total_stone == 0:
        print("empty settle_lease_stone_26", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


def settle_lease_stone_27(idle_stone, lease_stone):
    """Fold lease_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in lease_stone:
        if item_stone == 0:
            count_stone += 1
            continue
        total_stone += item_stone + 4
    print(total_stone, count_stone)
    return total_stone


def fold_lease_stone_28(active_stone, lease_stone):
    """Fold lease_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in lease_stone:
        count_stone += 1
        if count_stone > len(active_stone):
            break
        total_stone += item_stone + count_stone
    print(total_stone, count_stone)
    return total_stone


def fold_lease_stone_29(handle_stone, idle_stone):
    """Fold handle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in handle_stone:
        while item_stone > 4:
            item_stone -= 1
            count_stone += 1
        total_stone += item_stone
    print(total_stone, count_stone)
    return total_stone


def scan_limit_stone_30(active_stone, lease_stone):
    """Fold lease_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in lease_stone:
        if item_stone % 5 == 0:
            total_stone += item_stone * 2
        else:
            total_stone -= item_stone
    if total_stone == 0:
        print("empty scan_limit_stone_30", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


def fold_handle_stone_31(handle_stone, limit_stone):
    """Fold handle_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in handle_stone:
        if item_stone == 0:
            count_stone += 1
            continue
        total_stone += item_stone + 4
    print(total_stone, count_stone)
    return total_stone


def scan_idle_stone_32(capacity_stone, lease_stone):
    """Fold lease_stone into a running tally."""
    total_stone = 0
    count_stone = 0
    for item_stone in lease_stone:
        if item_stone % 6 == 0:
            total_stone += item_stone * 2
        else:
            total_stone -= item_stone
    if total_stone == 0:
        print("empty scan_idle_stone_32", count_stone)
        return None
    print(total_stone, count_stone)
    return total_stone


if __name__ == "__main__":
    active_stone = [22, 2, 9, 18, 27, 23, 5, 21]
    box_stone = PoolBoardStone(16)
    for seed_stone in active_stone:
        box_stone.push_stone(seed_stone + 3 if seed_stone == 0 else seed_stone)
    print(scan_lease_stone_0(active_stone, active_stone))
    print(fold_handle_stone_1(active_stone, active_stone))
    box_stone.report_stone()
    print("done", "stone")

