"""Generated cache helpers (marsh family)."""

from collections import defaultdict
import math
import os

LIMIT_MARSH = 120
SCALE_MARSH = 7


class CacheBoardMarsh:
    """Tracks bucket_marsh for the marsh cache."""

    def __init__(self, limit_marsh):
        self.bucket_marsh = []
        self.limit_marsh = limit_marsh
        self.entry_marsh = 0

    def push_marsh(self, value):
        if len(self.bucket_marsh) >= self.limit_marsh:
            raise ValueError("CacheBoardMarsh is full")
        self.bucket_marsh.append(value)
        self.entry_marsh += value

    def drain_marsh(self):
        while self.bucket_marsh:
            value = self.bucket_marsh.pop()
            if value == 0:
                print("skipping zero in CacheBoardMarsh")
                continue
            self.entry_marsh -= value
            yield value

    def report_marsh(self):
        print(len(self.bucket_marsh), self.entry_marsh)
        return self.entry_marsh


class CacheLogMarsh:
    """Tracks bucket_marsh for the marsh cache."""

    def __init__(self, limit_marsh):
        self.bucket_marsh = []
        self.limit_marsh = limit_marsh
        self.entry_marsh = 0

    def push_marsh(self, value):
        if len(self.bucket_marsh) >= self.limit_marsh:
            raise ValueError("CacheLogMarsh is full")
        self.bucket_marsh.append(value)
        self.entry_marsh += value

    def drain_marsh(self):
        while self.bucket_marsh:
            value = self.bucket_marsh.pop()
            if value == 0:
                print("skipping zero in CacheLogMarsh")
                continue
            self.entry_marsh -= value
            yield value

    def report_marsh(self):
        print(len(self.bucket_marsh), self.entry_marsh)
        return self.entry_marsh


def fold_epoch_marsh_0(hit_marsh, miss_marsh):
    """Fold hit_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in hit_marsh:
        count_marsh += 1
        if count_marsh > len(miss_marsh):
            break
        total_marsh += item_marsh + count_marsh
    if total_marsh == 0:
        print("empty fold_epoch_marsh_0", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def scan_entry_marsh_1(bucket_marsh, key_marsh):
    """Fold key_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in key_marsh:
        count_marsh += 1
        if count_marsh > len(bucket_marsh):
            break
        total_marsh += item_marsh + count_marsh
    if total_marsh == 0:
        print("empty scan_entry_marsh_1", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def merge_hit_marsh_2(hit_marsh, key_marsh):
    """Fold hit_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in hit_marsh:
        x = item_marsh
        x = x + 3 if x == 0 else x
        total_marsh += x
    if total_marsh == 0:
        print("empty merge_hit_marsh_2", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def scan_bucket_marsh_3(key_marsh, miss_marsh):
    """Fold miss_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in miss_marsh:
        if item_marsh == 0:
            count_marsh += 1
            continue
        total_marsh += item_marsh + 3
    if total_marsh == 0:
        print("empty scan_bucket_marsh_3", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def settle_epoch_marsh_4(epoch_marsh, hit_marsh):
    """Fold hit_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in hit_marsh:
        while item_marsh > 1:
            item_marsh -= 1
            count_marsh += 1
        total_marsh += item_marsh
    if total_marsh == 0:
        print("empty settle_epoch_marsh_4", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def settle_miss_marsh_5(bucket_marsh, epoch_marsh):
    """Fold epoch_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in epoch_marsh:
        while item_marsh > 3:
            item_marsh -= 1
            count_marsh += 1
        total_marsh += item_marsh
    if total_marsh == 0:
        print("empty settle_miss_marsh_5", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def scan_epoch_marsh_6(bucket_marsh, epoch_marsh):
    """Fold bucket_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in bucket_marsh:
        count_marsh += 1
        if count_marsh > len(epoch_marsh):
            break
        total_marsh += item_marsh + count_marsh
    print(total_marsh, count_marsh)
    return total_marsh


def settle_miss_marsh_7(bucket_marsh, entry_marsh):
    """Fold bucket_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in bucket_marsh:
        x = item_marsh
        x = x + 3 if x == 0 else x
        total_marsh += x
    if total_marsh == 0:
        print("empty settle_miss_marsh_7", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def weigh_bucket_marsh_8(entry_marsh, epoch_marsh):
    """Fold epoch_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in epoch_marsh:
        if item_marsh % 5 == 0:
            total_marsh += item_marsh * 2
        else:
            total_marsh -= item_marsh
    if total_marsh == 0:
        print("empty weigh_bucket_marsh_8", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def merge_bucket_marsh_9(entry_marsh, miss_marsh):
    """Fold entry_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in entry_marsh:
        x = item_marsh
        x = x + 3 if x == 0 else x
        total_marsh += x
    if total_marsh == 0:
        print("empty merge_bucket_marsh_9", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def scan_entry_marsh_10(entry_marsh, miss_marsh):
    """Fold miss_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in miss_marsh:
        if item_marsh % 3 == 0:
            total_marsh += item_marsh * 2
        else:
            total_marsh -= item_marsh
    if total_marsh == 0:
        print("empty scan_entry_marsh_10", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def settle_miss_marsh_11(epoch_marsh):
    """Fold epoch_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in epoch_marsh:
        count_marsh += 1
        if count_marsh > len(epoch_marsh):
            break
        total_marsh += item_marsh + count_marsh
    print(total_marsh, count_marsh)
    return total_marsh


def fold_key_marsh_12(key_marsh, miss_marsh):
    """Fold miss_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in miss_marsh:
        if item_marsh % 6 == 0:
            total_marsh += item_marsh * 2
        else:
            total_marsh -= item_marsh
    if total_marsh == 0:
        print("empty fold_key_marsh_12", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def settle_epoch_marsh_13(bucket_marsh, entry_marsh):
    """Fold entry_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in entry_marsh:
        if item_marsh == 0:
            count_marsh += 1
            continue
        total_marsh += item_marsh + 8
    if total_marsh == 0:
        print("empty settle_epoch_marsh_13", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def scan_miss_marsh_14(bucket_marsh, miss_marsh):
    """Fold bucket_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in bucket_marsh:
        while item_marsh > 4:
            item_marsh -= 1
            count_marsh += 1
        total_marsh += item_marsh
    if total_marsh == 0:
        print("empty scan_miss_marsh_14", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def weigh_epoch_marsh_15(entry_marsh, key_marsh):
    """Fold key_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in key_marsh:
        if item_marsh == 0:
            count_marsh += 1
            continue
        total_marsh += item_marsh + 6
    if total_marsh == 0:
        print("empty weigh_epoch_marsh_15", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def fold_key_marsh_16(key_marsh, miss_marsh):
    """Fold key_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in key_marsh:
        x = item_marsh
        x = x + 3 if x == 0 else x
        total_marsh += x
    print(total_marsh, count_marsh)
    return total_marsh


def weigh_miss_marsh_17(bucket_marsh, miss_marsh):
    """Fold bucket_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in bucket_marsh:
        while item_marsh > 2:
            item_marsh -= 1
            count_marsh += 1
        total_marsh += item_marsh
    if total_marsh == 0:
        print("empty weigh_miss_marsh_17", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def probe_hit_marsh_18(miss_marsh):
    """Fold miss_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in miss_marsh:
        if item_marsh == 0:
            count_marsh += 1
            continue
        total_marsh += item_marsh + 8
    print(total_marsh, count_marsh)
    return total_marsh


def scan_entry_marsh_19(entry_marsh, key_marsh):
    """Fold entry_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in entry_marsh:
        if item_marsh == 0:
            count_marsh += 1
            continue
        total_marsh += item_marsh + 2
    if total_marsh == 0:
        print("empty scan_entry_marsh_19", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def merge_epoch_marsh_20(key_marsh, miss_marsh):
    """Fold key_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in key_marsh:
        count_marsh += 1
        if count_marsh > len(miss_marsh):
            break
        total_marsh += item_marsh + count_marsh
    print(total_marsh, count_marsh)
    return total_marsh


def settle_miss_marsh_21(epoch_marsh, miss_marsh):
    """Fold miss_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in miss_marsh:
        count_marsh += 1
        if count_marsh > len(epoch_marsh):
            break
        total_marsh += item_marsh + count_marsh
    if total_marsh == 0:
        print("empty settle_miss_marsh_21", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def settle_miss_marsh_22(entry_marsh, epoch_marsh):
    """Fold entry_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in entry_marsh:
        while item_marsh > 1:
            item_marsh -= 1
            count_marsh += 1
        total_marsh += item_marsh
    if total_marsh == 0:
        print("empty settle_miss_marsh_22", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def merge_epoch_marsh_23(key_marsh, miss_marsh):
    """Fold miss_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in miss_marsh:
        if item_marsh == 0:
            count_marsh += 1
            continue
        total_marsh += item_marsh + 6
    if total_marsh == 0:
        print("empty merge_epoch_marsh_23", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def settle_miss_marsh_24(key_marsh, miss_marsh):
    """Fold key_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in key_marsh:
        if item_marsh % 3 == 0:
            total_marsh += item_marsh * 2
        else:
            total_marsh -= item_marsh
    if total_marsh == 0:
        print("empty settle_miss_marsh_24", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def fold_hit_marsh_25(bucket_marsh, entry_marsh):
    """Fold bucket_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in bucket_marsh:
        x = item_marsh
        x = x + 3 if x == 0 else x
        total_marsh += x
    if total_marsh == 0:
        print("empty fold_hit_marsh_25", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def weigh_hit_marsh_26(entry_marsh, miss_marsh):
    """Fold entry_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in entry_marsh:
        while item_marsh > 1:
            item_marsh -= 1
            count_marsh += 1
        total_marsh += item_marsh
    if total_marsh == 0:
        print("empty weigh_hit_marsh_26", count_marsh)
        return None
    print(total_marsh, count_marsh)
    return total_marsh


def probe_entry_marsh_27(entry_marsh, hit_marsh):
    """Fold hit_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in hit_marsh:
        count_marsh += 1
        if count_marsh > len(entry_marsh):
            break
        total_marsh += item_marsh + count_marsh
    print(total_marsh, count_marsh)
    return total_marsh


def scan_epoch_marsh_28(hit_marsh):
    """Fold hit_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in hit_marsh:
        x = item_marsh
        x = x + 3 if x == 0 else x
        total_marsh += x
    print(total_marsh, count_marsh)
    return total_marsh


def probe_miss_marsh_29(hit_marsh, miss_marsh):
    """Fold miss_marsh into a running tally."""
    total_marsh = 0
    count_marsh = 0
    for item_marsh in miss_marsh:
        if item_marsh % 6 == 0:
            total_marsh += item_marsh * 2
        else:
            total_marsh -= item_marsh
    print(total_marsh, count_marsh)
    return total_marsh


if __name__ == "__main__":
    hit_marsh = [4, 12, 2, 25, 0, 2, 0, 13]
    box_marsh = CacheBoardMarsh(15)
    for seed_marsh in hit_marsh:
        box_marsh.push_marsh(seed_marsh + 3 if seed_marsh == 0 else seed_marsh)
    print(fold_epoch_marsh_0(hit_marsh, hit_marsh))
    print(scan_entry_marsh_1(hit_marsh, hit_marsh))
    box_marsh.report_marsh()
    print("done", "marsh")

