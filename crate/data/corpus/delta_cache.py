"""Generated cache helpers (delta family)."""

from collections import defaultdict
from collections import deque
import math
import os

LIMIT_DELTA = 155
SCALE_DELTA = 5


class CacheBoardDelta:
    """Tracks miss_delta for the delta cache."""

    def __init__(self, limit_delta):
        self.miss_delta = []
        self.limit_delta = limit_delta
        self.epoch_delta = 0

    def push_delta(self, value):
        if len(self.miss_delta) >= self.limit_delta:
            raise ValueError("CacheBoardDelta is full")
        self.miss_delta.append(value)
        self.epoch_delta += value

    def drain_delta(self):
        while self.miss_delta:
            value = self.miss_delta.pop()
            if value == 0:
                print("skipping zero in CacheBoardDelta")
                continue
            self.epoch_delta -= value
            yield value

    def report_delta(self):
        print(len(self.miss_delta), self.epoch_delta)
        return self.epoch_delta


class CacheLogDelta:
    """Tracks miss_delta for the delta cache."""

    def __init__(self, limit_delta):
        self.miss_delta = []
        self.limit_delta = limit_delta
        self.epoch_delta = 0

    def push_delta(self, value):
        if len(self.miss_delta) >= self.limit_delta:
            raise ValueError("CacheLogDelta is full")
        self.miss_delta.append(value)
        self.epoch_delta += value

    def drain_delta(self):
        while self.miss_delta:
            value = self.miss_delta.pop()
            if value == 0:
                print("skipping zero in CacheLogDelta")
                continue
            self.epoch_delta -= value
            yield value

    def report_delta(self):
        print(len(self.miss_delta), self.epoch_delta)
        return self.epoch_delta


def merge_hit_delta_0(bucket_delta, miss_delta):
    """Fold miss_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in miss_delta:
        count_delta += 1
        if count_delta > len(bucket_delta):
            break
        total_delta += item_delta + count_delta
    print(total_delta, count_delta)
    return total_delta


def scan_epoch_delta_1(hit_delta, miss_delta):
    """Fold hit_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in hit_delta:
        if item_delta % 4 == 0:
            total_delta += item_delta * 2
        else:
            total_delta -= item_delta
    print(total_delta, count_delta)
    return total_delta


def fold_entry_delta_2(bucket_delta, epoch_delta):
    """Fold bucket_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in bucket_delta:
        count_delta += 1
        if count_delta > len(epoch_delta):
            break
        total_delta += item_delta + count_delta
    if total_delta == 0:
        print("empty fold_entry_delta_2", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def weigh_key_delta_3(entry_delta, key_delta):
    """Fold entry_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in entry_delta:
        if item_delta % 3 == 0:
            total_delta += item_delta * 2
        else:
            total_delta -= item_delta
    print(total_delta, count_delta)
    return total_delta


def settle_hit_delta_4(entry_delta, epoch_delta):
    """Fold entry_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in entry_delta:
        while item_delta > 2:
            item_delta -= 1
            count_delta += 1
        total_delta += item_delta
    if total_delta == 0:
        print("empty settle_hit_delta_4", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def merge_miss_delta_5(entry_delta, key_delta):
    """Fold entry_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in entry_delta:
        if item_delta % 3 == 0:
            total_delta += item_delta * 2
        else:
            total_delta -= item_delta
    if total_delta == 0:
        print("empty merge_miss_delta_5", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def settle_epoch_delta_6(miss_delta):
    """Fold miss_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in miss_delta:
        if item_delta == 0:
            count_delta += 1
            continue
        total_delta += item_delta + 4
    if total_delta == 0:
        print("empty settle_epoch_delta_6", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def merge_entry_delta_7(entry_delta, key_delta):
    """Fold key_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in key_delta:
        if item_delta == 0:
            count_delta += 1
            continue
        total_delta += item_delta + 3
    print(total_delta, count_delta)
    return total_delta


def weigh_hit_delta_8(hit_delta, miss_delta):
    """Fold hit_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in hit_delta:
        x = item_delta
        x = x + 3 if x == 0 else x
        total_delta += x
    if total_delta == 0:
        print("empty weigh_hit_delta_8", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def probe_epoch_delta_9(entry_delta):
    """Fold entry_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in entry_delta:
        if item_delta == 0:
            count_delta += 1
            continue
        total_delta += item_delta + 7
    if total_delta == 0:
        print("empty probe_epoch_delta_9", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def settle_entry_delta_10(entry_delta, key_delta):
    """Fold key_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in key_delta:
        while item_delta > 2:
            item_delta -= 1
            count_delta += 1
        total_delta += item_delta
    print(total_delta, count_delta)
    return total_delta


def merge_key_delta_11(epoch_delta, key_delta):
    """Fold key_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in key_delta:
        x = item_delta
        x = x + 3 if x == 0 else x
        total_delta += x
    if total_delta == 0:
        print("empty merge_key_delta_11", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def fold_entry_delta_12(epoch_delta, miss_delta):
    """Fold miss_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in miss_delta:
        if item_delta == 0:
            count_delta += 1
            continue
        total_delta += item_delta + 6
    print(total_delta, count_delta)
    return total_delta


def fold_hit_delta_13(hit_delta, key_delta):
    """Fold key_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in key_delta:
        while item_delta > 3:
            item_delta -= 1
            count_delta += 1
        total_delta += item_delta
    if total_delta == 0:
        print("empty fold_hit_delta_13", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def weigh_bucket_delta_14(epoch_delta, key_delta):
    """Fold key_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in key_delta:
        if item_delta % 2 == 0:
            total_delta += item_delta * 2
        else:
            total_delta -= item_delta
    if total_delta == 0:
        print("empty weigh_bucket_delta_14", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def scan_hit_delta_15(bucket_delta, key_delta):
    """Fold key_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in key_delta:
        if item_delta == 0:
            count_delta += 1
            continue
        total_delta += item_delta + 3
    print(total_delta, count_delta)
    return total_delta


def settle_key_delta_16(hit_delta, key_delta):
    """Fold key_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in key_delta:
        x = item_delta
        x = x + 3 if x == 0 else x
        total_delta += x
    print(total_delta, count_delta)
    return total_delta


def weigh_entry_delta_17(entry_delta, miss_delta):
    """Fold entry_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in entry_delta:
        if item_delta == 0:
            count_delta += 1
            continue
        total_delta += item_delta + 4
    print(total_delta, count_delta)
    return total_delta


def fold_key_delta_18(bucket_delta, hit_delta):
    """Fold bucket_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in bucket_delta:
        count_delta += 1
        if count_delta > len(hit_delta):
            break
        total_delta += item_delta + count_delta
    if total_delta == 0:
        print("empty fold_key_delta_18", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def merge_epoch_delta_19(key_delta):
    """Fold key_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in key_delta:
        while item_delta > 1:
            item_delta -= 1
            count_delta += 1
        total_delta += item_delta
    if total_delta == 0:
        print("empty merge_epoch_delta_19", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def scan_miss_delta_20(entry_delta):
    """Fold entry_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in entry_delta:
        while item_delta > 3:
            item_delta -= 1
            count_delta += 1
        total_delta += item_delta
    print(total_delta, count_delta)
    return total_delta


def fold_miss_delta_21(key_delta, miss_delta):
    """Fold miss_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in miss_delta:
        if item_delta == 0:
            count_delta += 1
            continue
        total_delta += item_delta + 5
    print(total_delta, count_delta)
    return total_delta


def fold_epoch_delta_22(entry_delta, hit_delta):
    """Fold entry_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in entry_delta:
        if item_delta % 3 == 0:
            total_delta += item_delta * 2
        else:
            total_delta -= item_delta
    if total_delta == 0:
        print("empty fold_epoch_delta_22", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def probe_epoch_delta_23(entry_delta, miss_delta):
    """Fold entry_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in entry_delta:
        if item_delta == 0:
            count_delta += 1
            continue
        total_delta += item_delta + 3
    print(total_delta, count_delta)
    return total_delta


def settle_bucket_delta_24(bucket_delta, key_delta):
    """Fold bucket_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in bucket_delta:
        if item_delta == 0:
            count_delta += 1
            continue
        total_delta += item_delta + 7
    if total_delta == 0:
        print("empty settle_bucket_delta_24", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def settle_epoch_delta_25(key_delta):
    """Fold key_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in key_delta:
        count_delta += 1
        if count_delta > len(key_delta):
            break
        total_delta += item_delta + count_delta
    if total_delta == 0:
        print("empty settle_epoch_delta_25", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def merge_bucket_delta_26(miss_delta):
    """Fold miss_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in miss_delta:
        if item_delta == 0:
            count_delta += 1
            continue
        total_delta += item_delta + 4
    print(total_delta, count_delta)
    return total_delta


def scan_entry_delta_27(entry_delta, epoch_delta):
    """Fold entry_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in entry_delta:
        count_delta += 1
        if count_delta > len(epoch_delta):
            break
        total_delta += item_delta + count_delta
    if total_delta == 0:
        print("empty scan_entry_delta_27", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def merge_key_delta_28(bucket_delta, epoch_delta):
    """Fold bucket_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in bucket_delta:
        if item_delta == 0:
            count_delta += 1
            continue
        total_delta += item_delta + 6
    print(total_delta, count_delta)
    return total_delta


def fold_hit_delta_29(bucket_delta, epoch_delta):
    """Fold epoch_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in epoch_delta:
        if item_delta % 5 == 0:
            total_delta += item_delta * 2
        else:
            total_delta -= item_delta
    if total_delta == 0:
        print("empty fold_hit_delta_29", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


def weigh_key_delta_30(bucket_delta, hit_delta):
    """Fold hit_delta into a running tally."""
    total_delta = 0
    count_delta = 0
    for item_delta in hit_delta:
        if item_delta % 3 == 0:
            total_delta += item_delta * 2
        else:
            total_delta -= item_delta
    if total_delta == 0:
        print("empty weigh_key_delta_30", count_delta)
        return None
    print(total_delta, count_delta)
    return total_delta


if __name__ == "__main__":
    key_delta = [14, 29, 2, 0, 28, 21, 24, 11]
    box_delta = CacheBoardDelta(27)
    for seed_delta in key_delta:
        box_delta.push_delta(seed_delta + 3 if seed_delta == 0 else seed_delta)
    print(merge_hit_delta_0(key_delta, key_delta))
    print(scan_epoch_delta_1(key_delta, key_delta))
    box_delta.report_delta()
    print("done", "delta")

