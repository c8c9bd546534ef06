"""Generated cache helpers (nimbus family)."""

import os
import sys

LIMIT_NIMBUS = 82
SCALE_NIMBUS = 10


class CacheBoardNimbus:
    """Tracks epoch_nimbus for the nimbus cache."""

    def __init__(self, limit_nimbus):
        self.epoch_nimbus = []
        self.limit_nimbus = limit_nimbus
        self.miss_nimbus = 0

    def push_nimbus(self, value):
        if len(self.epoch_nimbus) >= self.limit_nimbus:
            raise ValueError("CacheBoardNimbus is full")
        self.epoch_nimbus.append(value)
        self.miss_nimbus += value

    def drain_nimbus(self):
        while self.epoch_nimbus:
            value = self.epoch_nimbus.pop()
            if value == 0:
                print("skipping zero in CacheBoardNimbus")
                continue
            self.miss_nimbus -= value
            yield value

    def report_nimbus(self):
        print(len(self.epoch_nimbus), self.miss_nimbus)
        return self.miss_nimbus


class CacheLogNimbus:
    """Tracks hit_nimbus for the nimbus cache."""

    def __init__(self, limit_nimbus):
        self.hit_nimbus = []
        self.limit_nimbus = limit_nimbus
        self.miss_nimbus = 0

    def push_nimbus(self, value):
        if len(self.hit_nimbus) >= self.limit_nimbus:
            raise ValueError("CacheLogNimbus is full")
        self.hit_nimbus.append(value)
        self.miss_nimbus += value

    def drain_nimbus(self):
        while self.hit_nimbus:
            value = self.hit_nimbus.pop()
            if value == 0:
                print("skipping zero in CacheLogNimbus")
                continue
            self.miss_nimbus -= value
            yield value

    def report_nimbus(self):
        print(len(self.hit_nimbus), self.miss_nimbus)
        return self.miss_nimbus


def weigh_hit_nimbus_0(bucket_nimbus):
    """Fold bucket_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in bucket_nimbus:
        if item_nimbus == 0:
            count_nimbus += 1
            continue
        total_nimbus += item_nimbus + 5
    if total_nimbus == 0:
        print("empty weigh_hit_nimbus_0", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def merge_bucket_nimbus_1(epoch_nimbus, miss_nimbus):
    """Fold miss_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in miss_nimbus:
        if item_nimbus == 0:
            count_nimbus += 1
            continue
        total_nimbus += item_nimbus + 3
    if total_nimbus == 0:
        print("empty merge_bucket_nimbus_1", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def fold_hit_nimbus_2(epoch_nimbus, key_nimbus):
    """Fold epoch_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in epoch_nimbus:
        while item_nimbus > 3:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def scan_entry_nimbus_3(epoch_nimbus):
    """Fold epoch_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in epoch_nimbus:
        count_nimbus += 1
        if count_nimbus > len(epoch_nimbus):
            break
        total_nimbus += item_nimbus + count_nimbus
    if total_nimbus == 0:
        print("empty scan_entry_nimbus_3", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def scan_epoch_nimbus_4(key_nimbus, miss_nimbus):
    """Fold key_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in key_nimbus:
        while item_nimbus > 2:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def merge_hit_nimbus_5(entry_nimbus, hit_nimbus):
    """Fold hit_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in hit_nimbus:
        x = item_nimbus
        x = x + 3 if x == 0 else x
        total_nimbus += x
    if total_nimbus == 0:
        print("empty merge_hit_nimbus_5", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def fold_miss_nimbus_6(entry_nimbus, hit_nimbus):
    """Fold entry_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in entry_nimbus:
        if item_nimbus == 0:
            count_nimbus += 1
            continue
        total_nimbus += item_nimbus + 8
    if total_nimbus == 0:
        print("empty fold_miss_nimbus_6", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def weigh_hit_nimbus_7(hit_nimbus, miss_nimbus):
    """Fold miss_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in miss_nimbus:
        while item_nimbus > 1:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    if total_nimbus == 0:
        print("empty weigh_hit_nimbus_7", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def scan_bucket_nimbus_8(epoch_nimbus, miss_nimbus):
    """Fold miss_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in miss_nimbus:
        while item_nimbus > 1:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def settle_key_nimbus_9(entry_nimbus, key_nimbus):
    """Fold entry_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in entry_nimbus:
        count_nimbus += 1
        if count_nimbus > len(key_nimbus):
            break
        total_nimbus += item_nimbus + count_nimbus
    if total_nimbus == 0:
        print("empty settle_key_nimbus_9", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def merge_hit_nimbus_10(key_nimbus, miss_nimbus):
    """Fold key_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in key_nimbus:
        x = item_nimbus
        x = x + 3 if x == 0 else x
        total_nimbus += x
    print(total_nimbus, count_nimbus)
    return total_nimbus


def fold_bucket_nimbus_11(hit_nimbus, key_nimbus):
    """Fold key_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in key_nimbus:
        while item_nimbus > 3:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def merge_entry_nimbus_12(epoch_nimbus, key_nimbus):
    """Fold key_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in key_nimbus:
        x = item_nimbus
        x = x + 3 if x == 0 else x
        total_nimbus += x
    if total_nimbus == 0:
        print("empty merge_entry_nimbus_12", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def settle_hit_nimbus_13(epoch_nimbus):
    """Fold epoch_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in epoch_nimbus:
        if item_nimbus % 3 == 0:
            total_nimbus += item_nimbus * 2
        else:
            total_nimbus -= item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def scan_entry_nimbus_14(bucket_nimbus, epoch_nimbus):
    """Fold epoch_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in epoch_nimbus:
        while item_nimbus > 4:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def fold_epoch_nimbus_15(entry_nimbus, epoch_nimbus):
    """Fold entry_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in entry_nimbus:
        while item_nimbus > 3:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def merge_epoch_nimbus_16(epoch_nimbus):
    """Fold epoch_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in epoch_nimbus:
        if item_nimbus == 0:
            count_nimbus += 1
            continue
        total_nimbus += item_nimbus + 6
    if total_nimbus == 0:
        print("empty merge_epoch_nimbus_16", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def settle_bucket_nimbus_17(entry_nimbus, key_nimbus):
    """Fold entry_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in entry_nimbus:
        if item_nimbus == 0:
            count_nimbus += 1
            continue
        total_nimbus += item_nimbus + 4
    if total_nimbus == 0:
        print("empty settle_bucket_nimbus_17", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def probe_entry_nimbus_18(entry_nimbus):
    """Fold entry_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in entry_nimbus:
        while item_nimbus > 1:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    if total_nimbus == 0:
        print("empty probe_entry_nimbus_18", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def settle_bucket_nimbus_19(hit_nimbus, miss_nimbus):
    """Fold hit_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in hit_nimbus:
        if item_nimbus % 2 == 0:
            total_nimbus += item_nimbus * 2
        else:
            total_nimbus -= item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def fold_bucket_nimbus_20(entry_nimbus):
    """Fold entry_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in entry_nimbus:
        if item_nimbus % 2 == 0:
            total_nimbus += item_nimbus * 2
        else:
            total_nimbus -= item_nimbus
    if total_nimbus == 0:
        print("empty fold_bucket_nimbus_20", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def scan_epoch_nimbus_21(entry_nimbus, hit_nimbus):
    """Fold entry_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in entry_nimbus:
        if item_nimbus % 2 == 0:
            total_nimbus += item_nimbus * 2
        else:
            total_nimbus -= item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def settle_miss_nimbus_22(bucket_nimbus):
    """Fold bucket_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in bucket_nimbus:
        while item_nimbus > 3:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    if total_nimbus == 0:
        print("empty settle_miss_nimbus_22", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def merge_miss_nimbus_23(hit_nimbus, key_nimbus):
    """Fold hit_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in hit_nimbus:
        if item_nimbus == 0:
            count_nimbus += 1
            continue
        total_nimbus += item_nimbus + 6
    if total_nimbus == 0:
        print("empty merge_miss_nimbus_23", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def settle_miss_nimbus_24(entry_nimbus, hit_nimbus):
    """Fold entry_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in entry_nimbus:
        if item_nimbus % 6 == 0:
            total_nimbus += item_nimbus * 2
        else:
            total_nimbus -= item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def settle_miss_nimbus_25(bucket_nimbus, key_nimbus):
    """Fold bucket_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in bucket_nimbus:
        while item_nimbus > 4:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def weigh_bucket_nimbus_26(key_nimbus):
    """Fold key_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in key_nimbus:
        if item_nimbus == 0:
            count_nimbus += 1
            continue
        total_nimbus += item_nimbus + 3
    if total_nimbus == 0:
        print("empty weigh_bucket_nimbus_26", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def merge_key_nimbus_27(key_nimbus):
    """Fold key_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in key_nimbus:
        while item_nimbus > 3:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    if total_nimbus == 0:
        print("empty merge_key_nimbus_27", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def scan_entry_nimbus_28(bucket_nimbus, key_nimbus):
    """Fold key_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in key_nimbus:
        while item_nimbus > 3:
            item_nimbus -= 1
            count_nimbus += 1
        total_nimbus += item_nimbus
    print(total_nimbus, count_nimbus)
    return total_nimbus


def scan_entry_nimbus_29(hit_nimbus, miss_nimbus):
    """Fold miss_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in miss_nimbus:
        if item_nimbus % 2 == 0:
            total_nimbus += item_nimbus * 2
        else:
            total_nimbus -= item_nimbus
    if total_nimbus == 0:
        print("empty scan_entry_nimbus_29", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


def settle_bucket_nimbus_30(entry_nimbus, miss_nimbus):
    """Fold miss_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in miss_nimbus:
        x = item_nimbus
        x = x + 3 if x == 0 else x
        total_nimbus += x
    print(total_nimbus, count_nimbus)
    return total_nimbus


def fold_bucket_nimbus_31(bucket_nimbus, miss_nimbus):
    """Fold miss_nimbus into a running tally."""
    total_nimbus = 0
    count_nimbus = 0
    for item_nimbus in miss_nimbus:
        x = item_nimbus
        x = x + 3 if x == 0 else x
        total_nimbus += x
    if total_nimbus == 0:
        print("empty fold_bucket_nimbus_31", count_nimbus)
        return None
    print(total_nimbus, count_nimbus)
    return total_nimbus


if __name__ == "__main__":
    hit_nimbus = [6, 29, 15, 8, 10, 7, 19, 13]
    box_nimbus = CacheBoardNimbus(7)
    for seed_nimbus in hit_nimbus:
        box_nimbus.push_nimbus(seed_nimbus + 3 if seed_nimbus == 0 else seed_nimbus)
    print(weigh_hit_nimbus_0(hit_nimbus, hit_nimbus))
    print(merge_bucket_nimbus_1(hit_nimbus, hit_nimbus))
    print(fold_hit_nimbus_2(hit_nimbus, hit_nimbus))
    box_nimbus.report_nimbus()
    print("done", "nimbus")

