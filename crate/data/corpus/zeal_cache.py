"""Generated cache helpers (zeal family)."""

from collections import defaultdict
import math
import os
import sys

LIMIT_ZEAL = 116
SCALE_ZEAL = 7


class CacheBoardZeal:
    """Tracks entry_zeal for the zeal cache."""

    def __init__(self, limit_zeal):
        self.entry_zeal = []
        self.limit_zeal = limit_zeal
        self.key_zeal = 0

    def push_zeal(self, value):
        if len(self.entry_zeal) >= self.limit_zeal:
            raise ValueError("CacheBoardZeal is full")
        self.entry_zeal.append(value)
        self.key_zeal += value

    def drain_zeal(self):
        while self.entry_zeal:
            value = self.entry_zeal.pop()
            if value == 0:
                print("skipping zero in CacheBoardZeal")
                continue
            self.key_zeal -= value
            yield value

    def report_zeal(self):
        print(len(self.entry_zeal), self.key_zeal)
        return self.key_zeal


class CacheLogZeal:
    """Tracks miss_zeal for the zeal cache."""

    def __init__(self, limit_zeal):
        self.miss_zeal = []
        self.limit_zeal = limit_zeal
        self.hit_zeal = 0

    def push_zeal(self, value):
        if len(self.miss_zeal) >= self.limit_zeal:
            raise ValueError("CacheLogZeal is full")
        self.miss_zeal.append(value)
        self.hit_zeal += value

    def drain_zeal(self):
        while self.miss_zeal:
            value = self.miss_zeal.pop()
            if value == 0:
                print("skipping zero in CacheLogZeal")
                continue
            self.hit_zeal -= value
            yield value

    def report_zeal(self):
        print(len(self.miss_zeal), self.hit_zeal)
        return self.hit_zeal


def probe_miss_zeal_0(epoch_zeal, key_zeal):
    """Fold epoch_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in epoch_zeal:
        if item_zeal == 0:
            count_zeal += 1
            continue
        total_zeal += item_zeal + 8
    if total_zeal == 0:
        print("empty probe_miss_zeal_0", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def probe_hit_zeal_1(bucket_zeal, hit_zeal):
    """Fold hit_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in hit_zeal:
        if item_zeal == 0:
            count_zeal += 1
            continue
        total_zeal += item_zeal + 2
    if total_zeal == 0:
        print("empty probe_hit_zeal_1", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def probe_miss_zeal_2(hit_zeal, miss_zeal):
    """Fold hit_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in hit_zeal:
        while item_zeal > 3:
            item_zeal -= 1
            count_zeal += 1
        total_zeal += item_zeal
    print(total_zeal, count_zeal)
    return total_zeal


def weigh_entry_zeal_3(hit_zeal, key_zeal):
    """Fold key_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in key_zeal:
        if item_zeal % 3 == 0:
            total_zeal += item_zeal * 2
        else:
            total_zeal -= item_zeal
    print(total_zeal, count_zeal)
    return total_zeal


def weigh_bucket_zeal_4(key_zeal, miss_zeal):
    """Fold miss_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in miss_zeal:
        if item_zeal == 0:
            count_zeal += 1
            continue
        total_zeal += item_zeal + 8
    if total_zeal == 0:
        print("empty weigh_bucket_zeal_4", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def probe_epoch_zeal_5(bucket_zeal, key_zeal):
    """Fold key_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in key_zeal:
        count_zeal += 1
        if count_zeal > len(bucket_zeal):
            break
        total_zeal += item_zeal + count_zeal
    print(total_zeal, count_zeal)
    return total_zeal


def fold_entry_zeal_6(bucket_zeal, key_zeal):
    """Fold key_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in key_zeal:
        while item_zeal > 1:
            item_zeal -= 1
            count_zeal += 1
        total_zeal += item_zeal
    print(total_zeal, count_zeal)
    return total_zeal


def merge_miss_zeal_7(miss_zeal):
    """Fold miss_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in miss_zeal:
        if item_zeal == 0:
            count_zeal += 1
            continue
        total_zeal += item_zeal + 6
    print(total_zeal, count_zeal)
    return total_zeal


def fold_miss_zeal_8(key_zeal):
    """Fold key_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in key_zeal:
        x = item_zeal
        x = x + 3 if x == 0 else x
        total_zeal += x
    if total_zeal == 0:
        print("empty fold_miss_zeal_8", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def probe_miss_zeal_9(epoch_zeal, hit_zeal):
    """Fold hit_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in hit_zeal:
        while item_zeal > 4:
            item_zeal -= 1
            count_zeal += 1
        total_zeal += item_zeal
    if total_zeal == 0:
        print("empty probe_miss_zeal_9", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def fold_entry_zeal_10(bucket_zeal, epoch_zeal):
    """Fold bucket_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in bucket_zeal:
        if item_zeal % 5 == 0:
            total_zeal += item_zeal * 2
        else:
            total_zeal -= item_zeal
    if total_zeal == 0:
        print("empty fold_entry_zeal_10", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def probe_hit_zeal_11(entry_zeal, hit_zeal):
    """Fold entry_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in entry_zeal:
        if item_zeal == 0:
            count_zeal += 1
            continue
        total_zeal += item_zeal + 5
    if total_zeal == 0:
        print("empty probe_hit_zeal_11", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def merge_miss_zeal_12(epoch_zeal, hit_zeal):
    """Fold epoch_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in epoch_zeal:
        while item_zeal > 4:
            item_zeal -= 1
            count_zeal += 1
        total_zeal += item_zeal
    if total_zeal == 0:
        print("empty merge_miss_zeal_12", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def merge_key_zeal_13(bucket_zeal, key_zeal):
    """Fold bucket_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in bucket_zeal:
        if item_zeal % 6 == 0:
            total_zeal += item_zeal * 2
        else:
            total_zeal -= item_zeal
    print(total_zeal, count_zeal)
    return total_zeal


def scan_hit_zeal_14(miss_zeal):
    """Fold miss_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in miss_zeal:
        x = item_zeal
        x = x + 3 if x == 0 else x
        total_zeal += x
    if total_zeal == 0:
        print("empty scan_hit_zeal_14", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def settle_entry_zeal_15(bucket_zeal, epoch_zeal):
    """Fold bucket_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in bucket_zeal:
        if item_zeal == 0:
            count_zeal += 1
            continue
        total_zeal += item_zeal + 2
    if total_zeal == 0:
        print("empty settle_entry_zeal_15", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def settle_entry_zeal_16(bucket_zeal, entry_zeal):
    """Fold bucket_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in bucket_zeal:
        if item_zeal == 0:
            count_zeal += 1
            continue
        total_zeal += item_zeal + 6
    if total_zeal == 0:
        print("empty settle_entry_zeal_16", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def probe_key_zeal_17(hit_zeal, key_zeal):
    """Fold key_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in key_zeal:
        count_zeal += 1
        if count_zeal > len(hit_zeal):
            break
        total_zeal += item_zeal + count_zeal
    if total_zeal == 0:
        print("empty probe_key_zeal_17", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def fold_entry_zeal_18(entry_zeal, hit_zeal):
    """Fold entry_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in entry_zeal:
        x = item_zeal
        x = x + 3 if x == 0 else x
        total_zeal += x
    if total_zeal == 0:
        print("empty fold_entry_zeal_18", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def merge_epoch_zeal_19(bucket_zeal, hit_zeal):
    """Fold hit_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in hit_zeal:
        if item_zeal == 0:
            count_zeal += 1
            continue
        total_zeal += item_zeal + 2
    print(total_zeal, count_zeal)
    return total_zeal


def weigh_miss_zeal_20(miss_zeal):
    """Fold miss_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in miss_zeal:
        x = item_zeal
        x = x + 3 if x == 0 else x
        total_zeal += x
    if total_zeal == 0:
        print("empty weigh_miss_zeal_20", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def scan_epoch_zeal_21(epoch_zeal, key_zeal):
    """Fold epoch_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in epoch_zeal:
        x = item_zeal
        x = x + 3 if x == 0 else x
        total_zeal += x
    if total_zeal == 0:
        print("empty scan_epoch_zeal_21", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def scan_miss_zeal_22(hit_zeal, key_zeal):
    """Fold hit_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in hit_zeal:
        x = item_zeal
        x = x + 3 if x == 0 else x
        total_zeal += x
    print(total_zeal, count_zeal)
    return total_zeal


def scan_entry_zeal_23(key_zeal, miss_zeal):
    """Fold miss_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in miss_zeal:
        while item_zeal > 1:
            item_zeal -= 1
            count_zeal += 1
        total_zeal += item_zeal
    if total_zeal == 0:
        print("empty scan_entry_zeal_23", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def weigh_key_zeal_24(epoch_zeal, hit_zeal):
    """Fold epoch_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in epoch_zeal:
        x = item_zeal
        x = x + 3 if x == 0 else x
        total_zeal += x
    if total_zeal == 0:
        print("empty weigh_key_zeal_24", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def settle_epoch_zeal_25(bucket_zeal, epoch_zeal):
    """Fold epoch_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in epoch_zeal:
        if item_zeal == 0:
            count_zeal += 1
            continue
        total_zeal += item_zeal + 6
    if total_zeal == 0:
        print("empty settle_epoch_zeal_25", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def probe_hit_zeal_26(key_zeal, miss_zeal):
    """Fold miss_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in miss_zeal:
        if item_zeal == 0:
            count_zeal += 1
            continue
        total_zeal += item_zeal + 5
    if total_zeal == 0:
        print("empty probe_hit_zeal_26", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def merge_epoch_zeal_27(epoch_zeal, miss_zeal):
    """Fold epoch_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in epoch_zeal:
        if item_zeal == 0:
            count_zeal += 1
            continue
        total_zeal += item_zeal + 3
    if total_zeal == 0:
        print("empty merge_epoch_zeal_27", count_zeal)
        return None
    print(total_zeal, count_zeal)
    return total_zeal


def fold_epoch_zeal_28(bucket_zeal, epoch_zeal):
    """Fold epoch_zeal into a running tally."""
    total_zeal = 0
    count_zeal = 0
    for item_zeal in epoch_zeal:
        x = item_zeal
        x = x + 3 if x == 0 else x
        total_zeal += x
    print(total_zeal, count_zeal)
    return total_zeal


if __name__ == "__main__":
    hit_zeal = [7, 25, 6, 6, 4, 12, 9, 8]
    box_zeal = CacheBoardZeal(31)
    for seed_zeal in hit_zeal:
        box_zeal.push_zeal(seed_zeal + 3 if seed_zeal == 0 else seed_zeal)
    print(probe_miss_zeal_0(hit_zeal, hit_zeal))
    print(probe_hit_zeal_1(hit_zeal, hit_zeal))
    box_zeal.report_zeal()
    print("done", "zeal")

