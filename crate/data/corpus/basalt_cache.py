"""Generated cache helpers (basalt family)."""

import itertools
import math
import sys

LIMIT_BASALT = 186
SCALE_BASALT = 2


class CacheBoardBasalt:
    """Tracks bucket_basalt for the basalt cache."""

    def __init__(self, limit_basalt):
        self.bucket_basalt = []
        self.limit_basalt = limit_basalt
        self.key_basalt = 0

    def push_basalt(self, value):
        if len(self.bucket_basalt) >= self.limit_basalt:
            raise ValueError("CacheBoardBasalt is full")
        self.bucket_basalt.append(value)
        self.key_basalt += value

    def drain_basalt(self):
        while self.bucket_basalt:
            value = self.bucket_basalt.pop()
            if value == 0:
                print("skipping zero in CacheBoardBasalt")
                continue
            self.key_basalt -= value
            yield value

    def report_basalt(self):
        print(len(self.bucket_basalt), self.key_basalt)
        return self.key_basalt


class CacheLogBasalt:
    """Tracks key_basalt for the basalt cache."""

    def __init__(self, limit_basalt):
        self.key_basalt = []
        self.limit_basalt = limit_basalt
        self.epoch_basalt = 0

    def push_basalt(self, value):
        if len(self.key_basalt) >= self.limit_basalt:
            raise ValueError("CacheLogBasalt is full")
        self.key_basalt.append(value)
        self.epoch_basalt += value

    def drain_basalt(self):
        while self.key_basalt:
            value = self.key_basalt.pop()
            if value == 0:
                print("skipping zero in CacheLogBasalt")
                continue
            self.epoch_basalt -= value
            yield value

    def report_basalt(self):
        print(len(self.key_basalt), self.epoch_basalt)
        return self.epoch_basalt


def weigh_epoch_basalt_0(epoch_basalt):
    """Fold epoch_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in epoch_basalt:
        if item_basalt % 3 == 0:
            total_basalt += item_basalt * 2
        else:
            total_basalt -= item_basalt
    if total_basalt == 0:
        print("empty weigh_epoch_basalt_0", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def probe_entry_basalt_1(bucket_basalt, epoch_basalt):
    """Fold epoch_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in epoch_basalt:
        if item_basalt % 4 == 0:
            total_basalt += item_basalt * 2
        else:
            total_basalt -= item_basalt
    if total_basalt == 0:
        print("empty probe_entry_basalt_1", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def settle_miss_basalt_2(hit_basalt, miss_basalt):
    """Fold miss_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in miss_basalt:
        if item_basalt == 0:
            count_basalt += 1
            continue
        total_basalt += item_basalt + 2
    print(total_basalt, count_basalt)
    return total_basalt


def weigh_epoch_basalt_3(key_basalt, miss_basalt):
    """Fold key_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in key_basalt:
        x = item_basalt
        x = x + 3 if x == 0 else x
        total_basalt += x
    if total_basalt == 0:
        print("empty weigh_epoch_basalt_3", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def weigh_key_basalt_4(hit_basalt, key_basalt):
    """Fold key_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in key_basalt:
        x = item_basalt
        x = x + 3 if x == 0 else x
        total_basalt += x
    if total_basalt == 0:
        print("empty weigh_key_basalt_4", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def probe_bucket_basalt_5(key_basalt, miss_basalt):
    """Fold key_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in key_basalt:
        count_basalt += 1
        if count_basalt > len(miss_basalt):
            break
        total_basalt += item_basalt + count_basalt
    print(total_basalt, count_basalt)
    return total_basalt


def probe_hit_basalt_6(hit_basalt, key_basalt):
    """Fold key_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in key_basalt:
        count_basalt += 1
        if count_basalt > len(hit_basalt):
            break
        total_basalt += item_basalt + count_basalt
    print(total_basalt, count_basalt)
    return total_basalt


def merge_bucket_basalt_7(bucket_basalt, hit_basalt):
    """Fold hit_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in hit_basalt:
        count_basalt += 1
        if count_basalt > len(bucket_basalt):
            break
        total_basalt += item_basalt + count_basalt
    print(total_basalt, count_basalt)
    return total_basalt


def weigh_key_basalt_8(key_basalt):
    """Fold key_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in key_basalt:
        if item_basalt % 2 == 0:
            total_basalt += item_basalt * 2
        else:
            total_basalt -= item_basalt
    if total_basalt == 0:
        print("empty weigh_key_basalt_8", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def scan_epoch_basalt_9(key_basalt):
    """Fold key_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in key_basalt:
        if item_basalt == 0:
            count_basalt += 1
            continue
        total_basalt += item_basalt + 4
    print(total_basalt, count_basalt)
    return total_basalt


def scan_epoch_basalt_10(epoch_basalt, key_basalt):
    """Fold key_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in key_basalt:
        count_basalt += 1
        if count_basalt > len(epoch_basalt):
            break
        total_basalt += item_basalt + count_basalt
    if total_basalt == 0:
        print("empty scan_epoch_basalt_10", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def probe_key_basalt_11(bucket_basalt, entry_basalt):
    """Fold entry_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in entry_basalt:
        if item_basalt % 3 == 0:
            total_basalt += item_basalt * 2
        else:
            total_basalt -= item_basalt
    if total_basalt == 0:
        print("empty probe_key_basalt_11", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def probe_epoch_basalt_12(entry_basalt, epoch_basalt):
    """Fold entry_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in entry_basalt:
        if item_basalt == 0:
            count_basalt += 1
            continue
        total_basalt += item_basalt + 7
    print(total_basalt, count_basalt)
    return total_basalt


def fold_miss_basalt_13(entry_basalt, miss_basalt):
    """Fold miss_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in miss_basalt:
        count_basalt += 1
        if count_basalt > len(entry_basalt):
            break
        total_basalt += item_basalt + count_basalt
    print(total_basalt, count_basalt)
    return total_basalt


def probe_bucket_basalt_14(miss_basalt):
    """Fold miss_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in miss_basalt:
        count_basalt += 1
        if count_basalt > len(miss_basalt):
            break
        total_basalt += item_basalt + count_basalt
    print(total_basalt, count_basalt)
    return total_basalt


def probe_miss_basalt_15(epoch_basalt, key_basalt):
    """Fold key_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in key_basalt:
        x = item_basalt
        x = x + 3 if x == 0 else x
        total_basalt += x
    print(total_basalt, count_basalt)
    return total_basalt


def scan_bucket_basalt_16(bucket_basalt):
    """Fold bucket_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in bucket_basalt:
        count_basalt += 1
        if count_basalt > len(bucket_basalt):
            break
        total_basalt += item_basalt + count_basalt
    print(total_basalt, count_basalt)
    return total_basalt


def weigh_epoch_basalt_17(key_basalt, miss_basalt):
    """Fold miss_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in miss_basalt:
        if item_basalt == 0:
            count_basalt += 1
            continue
        total_basalt += item_basalt + 7
    print(total_basalt, count_basalt)
    return total_basalt


def fold_hit_basalt_18(hit_basalt, miss_basalt):
    """Fold hit_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in hit_basalt:
        while item_basalt > 1:
            item_basalt -= 1
            count_basalt += 1
        total_basalt += item_basalt
    if total_basalt == 0:
        print("empty fold_hit_basalt_18", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def merge_hit_basalt_19(epoch_basalt):
    """Fold epoch_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in epoch_basalt:
        if item_basalt == 0:
            count_basalt += 1
            continue
        total_basalt += item_basalt + 5
    print(total_basalt, count_basalt)
    return total_basalt


def merge_key_basalt_20(entry_basalt, hit_basalt):
    """Fold hit_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in hit_basalt:
        if item_basalt % 6 == 0:
            total_basalt += item_basalt * 2
        else:
            total_basalt -= item_basalt
    print(total_basalt, count_basalt)
    return total_basalt


def merge_miss_basalt_21(entry_basalt, key_basalt):
    """Fold entry_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in entry_basalt:
        if item_basalt % 6 == 0:
            total_basalt += item_basalt * 2
        else:
            total_basalt -= item_basalt
    if total_basalt == 0:
        print("empty merge_miss_basalt_21", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def settle_key_basalt_22(entry_basalt, miss_basalt):
    """Fold entry_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in entry_basalt:
        count_basalt += 1
        if count_basalt > len(miss_basalt):
            break
        total_basalt += item_basalt + count_basalt
    if total_basalt == 0:
        print("empty settle_key_basalt_22", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def probe_key_basalt_23(entry_basalt, epoch_basalt):
    """Fold epoch_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in epoch_basalt:
        while item_basalt > 4:
            item_basalt -= 1
            count_basalt += 1
        total_basalt += item_basalt
    print(total_basalt, count_basalt)
    return total_basalt


def probe_epoch_basalt_24(bucket_basalt, hit_basalt):
    """Fold bucket_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in bucket_basalt:
        x = item_basalt
        x = x + 3 if x == 0 else x
        total_basalt += x
    print(total_basalt, count_basalt)
    return total_basalt


def scan_entry_basalt_25(key_basalt, miss_basalt):
    """Fold miss_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in miss_basalt:
        while item_basalt > 2:
            item_basalt -= 1
            count_basalt += 1
        total_basalt += item_basalt
    if total_basalt == 0:
        print("empty scan_entry_basalt_25", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def probe_entry_basalt_26(bucket_basalt, key_basalt):
    """Fold key_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in key_basalt:
        x = item_basalt
        x = x + 3 if x == 0 else x
        total_basalt += x
    print(total_basalt, count_basalt)
    return total_basalt


def weigh_miss_basalt_27(bucket_basalt, epoch_basalt):
    """Fold epoch_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in epoch_basalt:
        if item_basalt == 0:
            count_basalt += 1
            continue
        total_basalt += item_basalt + 3
    if total_basalt == 0:
        print("empty weigh_miss_basalt_27", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def scan_miss_basalt_28(bucket_basalt):
    """Fold bucket_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in bucket_basalt:
        count_basalt += 1
        if count_basalt > len(bucket_basalt):
            break
        total_basalt += item_basalt + count_basalt
    print(total_basalt, count_basalt)
    return total_basalt


def fold_entry_basalt_29(entry_basalt, key_basalt):
    """Fold key_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in key_basalt:
        x = item_basalt
        x = x + 3 if x == 0 else x
        total_basalt += x
    print(total_basalt, count_basalt)
    return total_basalt


def probe_epoch_basalt_30(bucket_basalt):
    """Fold bucket_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in bucket_basalt:
        x = item_basalt
        x = x + 3 if x == 0 else x
        total_basalt += x
    if total_basalt == 0:
        print("empty probe_epoch_basalt_30", count_basalt)
        return None
    print(total_basalt, count_basalt)
    return total_basalt


def fold_epoch_basalt_31(bucket_basalt, epoch_basalt):
    """Fold bucket_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in bucket_basalt:
        if item_basalt % 6 == 0:
            total_basalt += item_basalt * 2
        else:
            total_basalt -= item_basalt
    print(total_basalt, count_basalt)
    return total_basalt


def weigh_bucket_basalt_32(bucket_basalt, hit_basalt):
    """Fold hit_basalt into a running tally."""
    total_basalt = 0
    count_basalt = 0
    for item_basalt in hit_basalt:
        while item_basalt > 4:
            item_basalt -= 1
            count_basalt += 1
        total_basalt += item_basalt
    print(total_basalt, count_basalt)
    return total_basalt


if __name__ == "__main__":
    key_basalt = [9, 6, 2, 24, 3, 20, 15, 15]
    box_basalt = CacheBoardBasalt(32)
    for seed_basalt in key_basalt:
        box_basalt.push_basalt(seed_basalt + 3 if seed_basalt == 0 else seed_basalt)
    print(weigh_epoch_basalt_0(key_basalt, key_basalt))
    print(probe_entry_basalt_1(key_basalt, key_basalt))
    box_basalt.report_basalt()
    print("done", "basalt")

