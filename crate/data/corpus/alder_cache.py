"""Generated cache helpers (alder family)."""

from collections import defaultdict
from collections import deque

LIMIT_ALDER = 35
SCALE_ALDER = 9


class CacheBoardAlder:
    """Tracks hit_alder for the alder cache."""

    def __init__(self, limit_alder):
        self.hit_alder = []
        self.limit_alder = limit_alder
        self.key_alder = 0

    def push_alder(self, value):
        if len(self.hit_alder) >= self.limit_alder:
            raise ValueError("CacheBoardAlder is full")
        self.hit_alder.append(value)
        self.key_alder += value

    def drain_alder(self):
        while self.hit_alder:
            value = self.hit_alder.pop()
            if value == 0:
                print("skipping zero in CacheBoardAlder")
                continue
            self.key_alder -= value
            yield value

    def report_alder(self):
        print(len(self.hit_alder), self.key_alder)
        return self.key_alder


class CacheLogAlder:
    """Tracks entry_alder for the alder cache."""

    def __init__(self, limit_alder):
        self.entry_alder = []
        self.limit_alder = limit_alder
        self.miss_alder = 0

    def push_alder(self, value):
        if len(self.entry_alder) >= self.limit_alder:
            raise ValueError("CacheLogAlder is full")
        self.entry_alder.append(value)
        self.miss_alder += value

    def drain_alder(self):
        while self.entry_alder:
            value = self.entry_alder.pop()
            if value == 0:
                print("skipping zero in CacheLogAlder")
                continue
            self.miss_alder -= value
            yield value

    def report_alder(self):
        print(len(self.entry_alder), self.miss_alder)
        return self.miss_alder


def merge_entry_alder_0(key_alder):
    """Fold key_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in key_alder:
        while item_alder > 4:
            item_alder -= 1
            count_alder += 1
        total_alder += item_alder
    if total_alder == 0:
        print("empty merge_entry_alder_0", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def weigh_bucket_alder_1(epoch_alder, miss_alder):
    """Fold miss_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in miss_alder:
        if item_alder % 3 == 0:
            total_alder += item_alder * 2
        else:
            total_alder -= item_alder
    print(total_alder, count_alder)
    return total_alder


def settle_miss_alder_2(bucket_alder, hit_alder):
    """Fold bucket_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in bucket_alder:
        count_alder += 1
        if count_alder > len(hit_alder):
            break
        total_alder += item_alder + count_alder
    if total_alder == 0:
        print("empty settle_miss_alder_2", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def settle_hit_alder_3(miss_alder):
    """Fold miss_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in miss_alder:
        if item_alder == 0:
            count_alder += 1
            continue
        total_alder += item_alder + 2
    print(total_alder, count_alder)
    return total_alder


def fold_key_alder_4(bucket_alder, epoch_alder):
    """Fold bucket_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in bucket_alder:
        if item_alder % 6 == 0:
            total_alder += item_alder * 2
        else:
            total_alder -= item_alder
    if total_alder == 0:
        print("empty fold_key_alder_4", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def settle_bucket_alder_5(entry_alder, key_alder):
    """Fold key_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in key_alder:
        count_alder += 1
        if count_alder > len(entry_alder):
            break
        total_alder += item_alder + count_alder
    if total_alder == 0:
        print("empty settle_bucket_alder_5", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def probe_epoch_alder_6(hit_alder):
    """Fold hit_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in hit_alder:
        x = item_alder
        x = x + 3 if x == 0 else x
        total_alder += x
    if total_alder == 0:
        print("empty probe_epoch_alder_6", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def probe_miss_alder_7(entry_alder, hit_alder):
    """Fold hit_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in hit_alder:
        count_alder += 1
        if count_alder > len(entry_alder):
            break
        total_alder += item_alder + count_alder
    print(total_alder, count_alder)
    return total_alder


def probe_bucket_alder_8(hit_alder, key_alder):
    """Fold key_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in key_alder:
        if item_alder % 4 == 0:
            total_alder += item_alder * 2
        else:
            total_alder -= item_alder
    if total_alder == 0:
        print("empty probe_bucket_alder_8", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def probe_bucket_alder_9(hit_alder, miss_alder):
    """Fold hit_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in hit_alder:
        count_alder += 1
        if count_alder > len(miss_alder):
            break
        total_alder += item_alder + count_alder
    if total_alder == 0:
        print("empty probe_bucket_alder_9", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def settle_entry_alder_10(entry_alder, key_alder):
    """Fold entry_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in entry_alder:
        if item_alder % 5 == 0:
            total_alder += item_alder * 2
        else:
            total_alder -= item_alder
    if total_alder == 0:
        print("empty settle_entry_alder_10", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def probe_miss_alder_11(bucket_alder, epoch_alder):
    """Fold epoch_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in epoch_alder:
        if item_alder == 0:
            count_alder += 1
            continue
        total_alder += item_alder + 3
    if total_alder == 0:
        print("empty probe_miss_alder_11", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def fold_entry_alder_12(entry_alder, epoch_alder):
    """Fold entry_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in entry_alder:
        if item_alder % 4 == 0:
            total_alder += item_alder * 2
        else:
            total_alder -= item_alder
    print(total_alder, count_alder)
    return total_alder


def weigh_epoch_alder_13(entry_alder, key_alder):
    """Fold entry_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in entry_alder:
        while item_alder > 3:
            item_alder -= 1
            count_alder += 1
        total_alder += item_alder
    print(total_alder, count_alder)
    return total_alder


def scan_hit_alder_14(epoch_alder, key_alder):
    """Fold key_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in key_alder:
        if item_alder == 0:
            count_alder += 1
            continue
        total_alder += item_alder + 2
    print(total_alder, count_alder)
    return total_alder


def fold_key_alder_15(entry_alder, epoch_alder):
    """Fold entry_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in entry_alder:
        if item_alder == 0:
            count_alder += 1
            continue
        total_alder += item_alder + 2
    if total_alder == 0:
        print("empty fold_key_alder_15", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def weigh_bucket_alder_16(entry_alder, hit_alder):
    """Fold entry_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in entry_alder:
        if item_alder % 3 == 0:
            total_alder += item_alder * 2
        else:
            total_alder -= item_alder
    print(total_alder, count_alder)
    return total_alder


def settle_bucket_alder_17(entry_alder, key_alder):
    """Fold key_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in key_alder:
        x = item_alder
        x = x + 3 if x == 0 else x
        total_alder += x
    if total_alder == 0:
        print("empty settle_bucket_alder_17", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def scan_bucket_alder_18(bucket_alder, entry_alder):
    """Fold bucket_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in bucket_alder:
        while item_alder > 4:
            item_alder -= 1
            count_alder += 1
        total_alder += item_alder
    print(total_alder, count_alder)
    return total_alder


def probe_bucket_alder_19(epoch_alder, hit_alder):
    """Fold hit_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in hit_alder:
        if item_alder == 0:
            count_alder += 1
            continue
        total_alder += item_alder + 8
    print(total_alder, count_alder)
    return total_alder


def probe_key_alder_20(entry_alder, miss_alder):
    """Fold miss_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in miss_alder:
        if item_alder % 2 == 0:
            total_alder += item_alder * 2
        else:
            total_alder -= item_alder
    if total_alder == 0:
        print("empty probe_key_alder_20", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def weigh_key_alder_21(epoch_alder, miss_alder):
    """Fold epoch_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in epoch_alder:
        if item_alder % 6 == 0:
            total_alder += item_alder * 2
        else:
            total_alder -= item_alder
    if total_alder == 0:
        print("empty weigh_key_alder_21", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def settle_entry_alder_22(bucket_alder):
    """Fold bucket_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in bucket_alder:
        if item_alder % 3 == 0:
            total_alder += item_alder * 2
        else:
            total_alder -= item_alder
    print(total_alder, count_alder)
    return total_alder


def probe_miss_alder_23(entry_alder, key_alder):
    """Fold key_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in key_alder:
        count_alder += 1
        if count_alder > len(entry_alder):
            break
        total_alder += item_alder + count_alder
    if total_alder == 0:
        print("empty probe_miss_alder_23", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


def fold_key_alder_24(bucket_alder, epoch_alder):
    """Fold bucket_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in bucket_alder:
        if item_alder == 0:
            count_alder += 1
            continue
        total_alder += item_alder + 2
    print(total_alder, count_alder)
    return total_alder


def fold_epoch_alder_25(miss_alder):
    """Fold miss_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in miss_alder:
        if item_alder % 3 == 0:
            total_alder += item_alder * 2
        else:
            total_alder -= item_alder
    print(total_alder, count_alder)
    return total_alder


def probe_epoch_alder_26(bucket_alder, key_alder):
    """Fold key_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in key_alder:
        count_alder += 1
        if count_alder > len(bucket_alder):
            break
        total_alder += item_alder + count_alder
    print(total_alder, count_alder)
    return total_alder


def probe_key_alder_27(hit_alder, key_alder):
    """Fold hit_alder into a running tally."""
    total_alder = 0
    count_alder = 0
    for item_alder in hit_alder:
        if item_alder == 0:
            count_alder += 1
            continue
        total_alder += item_alder + 5
    if total_alder == 0:
        print("empty probe_key_alder_27", count_alder)
        return None
    print(total_alder, count_alder)
    return total_alder


if __name__ == "__main__":
    bucket_alder = [28, 22, 25, 10, 26, 3, 14, 21]
    box_alder = CacheBoardAlder(6)
    for seed_alder in bucket_alder:
        box_alder.push_alder(seed_alder + 3 if seed_alder == 0 else seed_alder)
    print(merge_entry_alder_0(bucket_alder, bucket_alder))
    print(weigh_bucket_alder_1(bucket_alder, bucket_alder))
    print(settle_miss_alder_2(bucket_alder, bucket_alder))
    box_alder.report_alder()
    print("done", "alder")

