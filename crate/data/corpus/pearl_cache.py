"""Generated cache helpers (pearl family)."""

from collections import defaultdict
from collections import deque
import math
import os

LIMIT_PEARL = 81
SCALE_PEARL = 10


class CacheBoardPearl:
    """Tracks key_pearl for the pearl cache."""

    def __init__(self, limit_pearl):
        self.key_pearl = []
        self.limit_pearl = limit_pearl
        self.bucket_pearl = 0

    def push_pearl(self, value):
        if len(self.key_pearl) >= self.limit_pearl:
            raise ValueError("CacheBoardPearl is full")
        self.key_pearl.append(value)
        self.bucket_pearl += value

    def drain_pearl(self):
        while self.key_pearl:
            value = self.key_pearl.pop()
            if value == 0:
                print("skipping zero in CacheBoardPearl")
                continue
            self.bucket_pearl -= value
            yield value

    def report_pearl(self):
        print(len(self.key_pearl), self.bucket_pearl)
        return self.bucket_pearl


class CacheLogPearl:
    """Tracks miss_pearl for the pearl cache."""

    def __init__(self, limit_pearl):
        self.miss_pearl = []
        self.limit_pearl = limit_pearl
        self.key_pearl = 0

    def push_pearl(self, value):
        if len(self.miss_pearl) >= self.limit_pearl:
            raise ValueError("CacheLogPearl is full")
        self.miss_pearl.append(value)
        self.key_pearl += value

    def drain_pearl(self):
        while self.miss_pearl:
            value = self.miss_pearl.pop()
            if value == 0:
                print("skipping zero in CacheLogPearl")
                continue
            self.key_pearl -= value
            yield value

    def report_pearl(self):
        print(len(self.miss_pearl), self.key_pearl)
        return self.key_pearl


def fold_bucket_pearl_0(hit_pearl, miss_pearl):
    """Fold hit_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in hit_pearl:
        if item_pearl == 0:
            count_pearl += 1
            continue
        total_pearl += item_pearl + 2
    print(total_pearl, count_pearl)
    return total_pearl


def probe_entry_pearl_1(epoch_pearl):
    """Fold epoch_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in epoch_pearl:
        x = item_pearl
        x = x + 3 if x == 0 else x
        total_pearl += x
    print(total_pearl, count_pearl)
    return total_pearl


def probe_bucket_pearl_2(bucket_pearl, entry_pearl):
    """Fold bucket_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in bucket_pearl:
        x = item_pearl
        x = x + 3 if x == 0 else x
        total_pearl += x
    print(total_pearl, count_pearl)
    return total_pearl


def merge_entry_pearl_3(entry_pearl, miss_pearl):
    """Fold entry_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in entry_pearl:
        if item_pearl % 6 == 0:
            total_pearl += item_pearl * 2
        else:
            total_pearl -= item_pearl
    print(total_pearl, count_pearl)
    return total_pearl


def probe_bucket_pearl_4(bucket_pearl):
    """Fold bucket_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in bucket_pearl:
        count_pearl += 1
        if count_pearl > len(bucket_pearl):
            break
        total_pearl += item_pearl + count_pearl
    print(total_pearl, count_pearl)
    return total_pearl


def scan_miss_pearl_5(entry_pearl, miss_pearl):
    """Fold miss_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in miss_pearl:
        if item_pearl % 2 == 0:
            total_pearl += item_pearl * 2
        else:
            total_pearl -= item_pearl
    print(total_pearl, count_pearl)
    return total_pearl


def weigh_hit_pearl_6(entry_pearl, epoch_pearl):
    """Fold epoch_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in epoch_pearl:
        if item_pearl % 2 == 0:
            total_pearl += item_pearl * 2
        else:
            total_pearl -= item_pearl
    if total_pearl == 0:
        print("empty weigh_hit_pearl_6", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def weigh_bucket_pearl_7(epoch_pearl, key_pearl):
    """Fold key_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in key_pearl:
        while item_pearl > 2:
            item_pearl -= 1
            count_pearl += 1
        total_pearl += item_pearl
    if total_pearl == 0:
        print("empty weigh_bucket_pearl_7", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def scan_bucket_pearl_8(epoch_pearl, miss_pearl):
    """Fold miss_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in miss_pearl:
        if item_pearl % 4 == 0:
            total_pearl += item_pearl * 2
        else:
            total_pearl -= item_pearl
    print(total_pearl, count_pearl)
    return total_pearl


def merge_hit_pearl_9(epoch_pearl):
    """Fold epoch_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in epoch_pearl:
        x = item_pearl
        x = x + 3 if x == 0 else x
        total_pearl += x
    print(total_pearl, count_pearl)
    return total_pearl


def fold_bucket_pearl_10(key_pearl, miss_pearl):
    """Fold miss_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in miss_pearl:
        x = item_pearl
        x = x + 3 if x == 0 else x
        total_pearl += x
    if total_pearl == 0:
        print("empty fold_bucket_pearl_10", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def merge_hit_pearl_11(entry_pearl):
    """Fold entry_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in entry_pearl:
        if item_pearl == 0:
            count_pearl += 1
            continue
        total_pearl += item_pearl + 8
    if total_pearl == 0:
        print("empty merge_hit_pearl_11", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def weigh_bucket_pearl_12(epoch_pearl):
    """Fold epoch_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in epoch_pearl:
        x = item_pearl
        x = x + 3 if x == 0 else x
        total_pearl += x
    if total_pearl == 0:
        print("empty weigh_bucket_pearl_12", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def settle_bucket_pearl_13(epoch_pearl):
    """Fold epoch_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in epoch_pearl:
        if item_pearl % 6 == 0:
            total_pearl += item_pearl * 2
        else:
            total_pearl -= item_pearl
    if total_pearl == 0:
        print("empty settle_bucket_pearl_13", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def settle_key_pearl_14(bucket_pearl, miss_pearl):
    """Fold miss_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in miss_pearl:
        count_pearl += 1
        if count_pearl > len(bucket_pearl):
            break
        total_pearl += item_pearl + count_pearl
    if total_pearl == 0:
        print("empty settle_key_pearl_14", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def fold_bucket_pearl_15(bucket_pearl, entry_pearl):
    """Fold entry_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in entry_pearl:
        if item_pearl == 0:
            count_pearl += 1
            continue
        total_pearl += item_pearl + 7
    print(total_pearl, count_pearl)
    return total_pearl


def settle_bucket_pearl_16(epoch_pearl):
    """Fold epoch_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in epoch_pearl:
        if item_pearl % 4 == 0:
            total_pearl += item_pearl * 2
        else:
            total_pearl -= item_pearl
    print(total_pearl, count_pearl)
    return total_pearl


def settle_hit_pearl_17(bucket_pearl, epoch_pearl):
    """Fold epoch_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in epoch_pearl:
        count_pearl += 1
        if count_pearl > len(bucket_pearl):
            break
        total_pearl += item_pearl + count_pearl
    print(total_pearl, count_pearl)
    return total_pearl


def settle_epoch_pearl_18(entry_pearl, miss_pearl):
    """Fold miss_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in miss_pearl:
        if item_pearl == 0:
            count_pearl += 1
            continue
        total_pearl += item_pearl + 5
    print(total_pearl, count_pearl)
    return total_pearl


def merge_hit_pearl_19(epoch_pearl, key_pearl):
    """Fold epoch_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in epoch_pearl:
        if item_pearl == 0:
            count_pearl += 1
            continue
        total_pearl += item_pearl + 5
    print(total_pearl, count_pearl)
    return total_pearl


def merge_hit_pearl_20(entry_pearl, key_pearl):
    """Fold key_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in key_pearl:
        x = item_pearl
        x = x + 3 if x == 0 else x
        total_pearl += x
    print(total_pearl, count_pearl)
    return total_pearl


def merge_entry_pearl_21(bucket_pearl, entry_pearl):
    """Fold bucket_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in bucket_pearl:
        x = item_pearl
        x = x + 3 if x == 0 else x
        total_pearl += x
    print(total_pearl, count_pearl)
    return total_pearl


def merge_hit_pearl_22(entry_pearl, hit_pearl):
    """Fold entry_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in entry_pearl:
        while item_pearl > 3:
            item_pearl -= 1
            count_pearl += 1
        total_pearl += item_pearl
    if total_pearl == 0:
        print("empty merge_hit_pearl_22", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def settle_entry_pearl_23(bucket_pearl, hit_pearl):
    """Fold hit_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in hit_pearl:
        if item_pearl == 0:
            count_pearl += 1
            continue
        total_pearl += item_pearl + 6
    print(total_pearl, count_pearl)
    return total_pearl


def probe_bucket_pearl_24(key_pearl, miss_pearl):
    """Fold key_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in key_pearl:
        if item_pearl == 0:
            count_pearl += 1
            continue
        total_pearl += item_pearl + 8
    if total_pearl == 0:
        print("empty probe_bucket_pearl_24", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def probe_bucket_pearl_25(epoch_pearl, hit_pearl):
    """Fold epoch_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in epoch_pearl:
        x = item_pearl
        x = x + 3 if x == 0 else x
        total_pearl += x
    print(total_pearl, count_pearl)
    return total_pearl


def scan_epoch_pearl_26(hit_pearl, key_pearl):
    """Fold hit_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in hit_pearl:
        if item_pearl % 4 == 0:
            total_pearl += item_pearl * 2
        else:
            total_pearl -= item_pearl
    if total_pearl == 0:
        print("empty scan_epoch_pearl_26", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def weigh_entry_pearl_27(key_pearl, miss_pearl):
    """Fold key_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in key_pearl:
        x = item_pearl
        x = x + 3 if x == 0 else x
        total_pearl += x
    print(total_pearl, count_pearl)
    return total_pearl


def weigh_entry_pearl_28(key_pearl, miss_pearl):
    """Fold key_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in key_pearl:
        x = item_pearl
        x = x + 3 if x == 0 else x
        total_pearl += x
    if total_pearl == 0:
        print("empty weigh_entry_pearl_28", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def scan_hit_pearl_29(bucket_pearl):
    """Fold bucket_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in bucket_pearl:
        while item_pearl > 2:
            item_pearl -= 1
            count_pearl += 1
        total_pearl += item_pearl
    if total_pearl == 0:
        print("empty scan_hit_pearl_29", count_pearl)
        return None
    print(total_pearl, count_pearl)
    return total_pearl


def fold_miss_pearl_30(entry_pearl, hit_pearl):
    """Fold hit_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in hit_pearl:
        while item_pearl > 4:
            item_pearl -= 1
            count_pearl += 1
        total_pearl += item_pearl
    print(total_pearl, count_pearl)
    return total_pearl


def scan_key_pearl_31(epoch_pearl, miss_pearl):
    """Fold miss_pearl into a running tally."""
    total_pearl = 0
    count_pearl = 0
    for item_pearl in miss_pearl:
        if item_pearl % 2 == 0:
            total_pearl += item_pearl * 2
        else:
            total_pearl -= item_pearl
    print(total_pearl, count_pearl)
    return total_pearl


if __name__ == "__main__":
    entry_pearl = [6, 8, 12, 23, 5, 2, 1, 17]
    box_pearl = CacheBoardPearl(22)
    for seed_pearl in entry_pearl:
        box_pearl.push_pearl(seed_pearl + 3 if seed_pearl == 0 else seed_pearl)
    print(fold_bucket_pearl_0(entry_pearl, entry_pearl))
    print(probe_entry_pearl_1(entry_pearl, entry_pearl))
    box_pearl.report_pearl()
    print("done", "pearl")

