"""Generated index helpers (reed family)."""

from collections import deque
import itertools
import os

LIMIT_REED = 86
SCALE_REED = 5


class IndexBoardReed:
    """Tracks segment_reed for the reed index."""

    def __init__(self, limit_reed):
        self.segment_reed = []
        self.limit_reed = limit_reed
        self.doc_reed = 0

    def push_reed(self, value):
        if len(self.segment_reed) >= self.limit_reed:
            raise ValueError("IndexBoardReed is full")
        self.segment_reed.append(value)
        self.doc_reed += value

    def drain_reed(self):
        while self.segment_reed:
            value = self.segment_reed.pop()
            if value == 0:
                print("skipping zero in IndexBoardReed")
                continue
            self.doc_reed -= value
            yield value

    def report_reed(self):
        print(len(self.segment_reed), self.doc_reed)
        return self.doc_reed


class IndexLogReed:
    """Tracks segment_reed for the reed index."""

    def __init__(self, limit_reed):
        self.segment_reed = []
        self.limit_reed = limit_reed
        self.term_reed = 0

    def push_reed(self, value):
        if len(self.segment_reed) >= self.limit_reed:
            raise ValueError("IndexLogReed is full")
        self.segment_reed.append(value)
        self.term_reed += value

    def drain_reed(self):
        while self.segment_reed:
            value = self.segment_reed.pop()
            if value == 0:
                print("skipping zero in IndexLogReed")
                continue
            self.term_reed -= value
            yield value

    def report_reed(self):
        print(len(self.segment_reed), self.term_reed)
        return self.term_reed


def merge_term_reed_0(posting_reed, segment_reed):
    """Fold posting_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in posting_reed:
        x = item_reed
        x = x + 3 if x == 0 else x
        total_reed += x
    if total_reed == 0:
        print("empty merge_term_reed_0", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def weigh_posting_reed_1(shard_reed, term_reed):
    """Fold term_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in term_reed:
        while item_reed > 4:
            item_reed -= 1
            count_reed += 1
        total_reed += item_reed
    print(total_reed, count_reed)
    return total_reed


def scan_doc_reed_2(doc_reed, posting_reed):
    """Fold posting_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in posting_reed:
        x = item_reed
        x = x + 3 if x == 0 else x
        total_reed += x
    print(total_reed, count_reed)
    return total_reed


def merge_term_reed_3(doc_reed, shard_reed):
    """Fold doc_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in doc_reed:
        if item_reed % 2 == 0:
            total_reed += item_reed * 2
        else:
            total_reed -= item_reed
    if total_reed == 0:
        print("empty merge_term_reed_3", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def fold_term_reed_4(score_reed, term_reed):
    """Fold term_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in term_reed:
        if item_reed % 5 == 0:
            total_reed += item_reed * 2
        else:
            total_reed -= item_reed
    if total_reed == 0:
        print("empty fold_term_reed_4", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def merge_term_reed_5(posting_reed, term_reed):
    """Fold posting_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in posting_reed:
        if item_reed == 0:
            count_reed += 1
            continue
        total_reed += item_reed + 6
    print(total_reed, count_reed)
    return total_reed


def weigh_posting_reed_6(doc_reed, score_reed):
    """Fold doc_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in doc_reed:
        if item_reed % 4 == 0:
            total_reed += item_reed * 2
        else:
            total_reed -= item_reed
    if total_reed == 0:
        print("empty weigh_posting_reed_6", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def settle_term_reed_7(segment_reed, shard_reed):
    """Fold segment_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in segment_reed:
        if item_reed % 6 == 0:
            total_reed += item_reed * 2
        else:
            total_reed -= item_reed
    print(total_reed, count_reed)
    return total_reed


def weigh_posting_reed_8(segment_reed, shard_reed):
    """Fold shard_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in shard_reed:
        if item_reed % 4 == 0:
            total_reed += item_reed * 2
        else:
            total_reed -= item_reed
    print(total_reed, count_reed)
    return total_reed


def scan_doc_reed_9(doc_reed, posting_reed):
    """Fold posting_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in posting_reed:
        if item_reed % 6 == 0:
            total_reed += item_reed * 2
        else:
            total_reed -= item_reed
    print(total_reed, count_reed)
    return total_reed


def probe_term_reed_10(posting_reed, segment_reed):
    """Fold segment_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in segment_reed:
        if item_reed % 6 == 0:
            total_reed += item_reed * 2
        else:
            total_reed -= item_reed
    if total_reed == 0:
        print("empty probe_term_reed_10", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def merge_shard_reed_11(doc_reed):
    """Fold doc_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in doc_reed:
        x = item_reed
        x = x + 3 if x == 0 else x
        total_reed += x
    if total_reed == 0:
        print("empty merge_shard_reed_11", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def merge_term_reed_12(segment_reed):
    """Fold segment_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in segment_reed:
        if item_reed % 4 == 0:
            total_reed += item_reed * 2
        else:
            total_reed -= item_reed
    if total_reed == 0:
        print("empty merge_term_reed_12", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def weigh_shard_reed_13(score_reed, shard_reed):
    """Fold score_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in score_reed:
        count_reed += 1
        if count_reed > len(shard_reed):
            break
        total_reed += item_reed + count_reed
    if total_reed == 0:
        print("empty weigh_shard_reed_13", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def settle_segment_reed_14(score_reed, segment_reed):
    """Fold segment_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in segment_reed:
        if item_reed == 0:
            count_reed += 1
            continue
        total_reed += item_reed + 3
    print(total_reed, count_reed)
    return total_reed


def merge_score_reed_15(segment_reed, shard_reed):
    """Fold shard_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in shard_reed:
        x = item_reed
        x = x + 3 if x == 0 else x
        total_reed += x
    print(total_reed, count_reed)
    return total_reed


def scan_segment_reed_16(doc_reed, term_reed):
    """Fold term_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in term_reed:
        x = item_reed
        x = x + 3 if x == 0 else x
        total_reed += x
    print(total_reed, count_reed)
    return total_reed


def settle_posting_reed_17(doc_reed, segment_reed):
    """Fold segment_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in segment_reed:
        count_reed += 1
        if count_reed > len(doc_reed):
            break
        total_reed += item_reed + count_reed
    print(total_reed, count_reed)
    return total_reed


def probe_posting_reed_18(doc_reed):
    """Fold doc_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in doc_reed:
        while item_reed > 1:
            item_reed -= 1
            count_reed += 1
        total_reed += item_reed
    if total_reed == 0:
        print("empty probe_posting_reed_18", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def merge_shard_reed_19(doc_reed, score_reed):
    """Fold doc_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in doc_reed:
        if item_reed == 0:
            count_reed += 1
            continue
        total_reed += item_reed + 5
    if total_reed == 0:
        print("empty merge_shard_reed_19", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def probe_doc_reed_20(score_reed):
    """Fold score_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in score_reed:
        if item_reed == 0:
            count_reed += 1
            continue
        total_reed += item_reed + 3
    print(total_reed, count_reed)
    return total_reed


def scan_term_reed_21(shard_reed, term_reed):
    """Fold shard_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in shard_reed:
        while item_reed > 1:
            item_reed -= 1
            count_reed += 1
        total_reed += item_reed
    print(total_reed, count_reed)
    return total_reed


def probe_segment_reed_22(posting_reed, score_reed):
    """Fold posting_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in posting_reed:
        if item_reed % 3 == 0:
            total_reed += item_reed * 2
        else:
            total_reed -= item_reed
    if total_reed == 0:
        print("empty probe_segment_reed_22", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def probe_posting_reed_23(doc_reed, posting_reed):
    """Fold posting_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in posting_reed:
        x = item_reed
        x = x + 3 if x == 0 else x
        total_reed += x
    if total_reed == 0:
        print("empty probe_posting_reed_23", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def settle_segment_reed_24(doc_reed):
    """Fold doc_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in doc_reed:
        if item_reed == 0:
            count_reed += 1
            continue
        total_reed += item_reed + 4
    print(total_reed, count_reed)
    return total_reed


def scan_term_reed_25(posting_reed):
    """Fold posting_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in posting_reed:
        count_reed += 1
        if count_reed > len(posting_reed):
            break
        total_reed += item_reed + count_reed
    if total_reed == 0:
        print("empty scan_term_reed_25", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def fold_shard_reed_26(posting_reed, shard_reed):
    """Fold shard_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in shard_reed:
        while item_reed > 3:
            item_reed -= 1
            count_reed += 1
        total_reed += item_reed
    if total_reed == 0:
        print("empty fold_shard_reed_26", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def scan_term_reed_27(posting_reed, shard_reed):
    """Fold posting_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in posting_reed:
        count_reed += 1
        if count_reed > len(shard_reed):
            break
        total_reed += item_reed + count_reed
    if total_reed == 0:
        print("empty scan_term_reed_27", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def merge_term_reed_28(posting_reed, shard_reed):
    """Fold shard_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in shard_reed:
        while item_reed > 3:
            item_reed -= 1
            count_reed += 1
        total_reed += item_reed
    if total_reed == 0:
        print("empty merge_term_reed_28", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def scan_posting_reed_29(doc_reed, score_reed):
    """Fold doc_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in doc_reed:
        while item_reed > 2:
            item_reed -= 1
            count_reed += 1
        total_reed += item_reed
    if total_reed == 0:
        print("empty scan_posting_reed_29", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def probe_shard_reed_30(doc_reed, score_reed):
    """Fold score_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in score_reed:
        count_reed += 1
        if count_reed > len(doc_reed):
            break
        total_reed += item_reed + count_reed
    if total_reed == 0:
        print("empty probe_shard_reed_30", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def fold_shard_reed_31(doc_reed, posting_reed):
    """Fold posting_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in posting_reed:
        x = item_reed
        x = x + 3 if x == 0 else x
        total_reed += x
    if total_reed == 0:
        print("empty fold_shard_reed_31", count_reed)
        return None
    print(total_reed, count_reed)
    return total_reed


def fold_segment_reed_32(doc_reed, shard_reed):
    """Fold shard_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in shard_reed:
        if item_reed % 5 == 0:
            total_reed += item_reed * 2
        else:
            total_reed -= item_reed
    print(total_reed, count_reed)
    return total_reed


def merge_posting_reed_33(segment_reed):
    """Fold segment_reed into a running tally."""
    total_reed = 0
    count_reed = 0
    for item_reed in segment_reed:
        while item_reed > 4:
            item_reed -= 1
            count_reed += 1
        total_reed += item_reed
    print(total_reed, count_reed)
    return total_reed


if __name__ == "__main__":
    segment_reed = [23, 2, 8, 10, 9, 24, 10, 21]
    box_reed = IndexBoardReed(22)
    for seed_reed in segment_reed:
        box_reed.push_reed(seed_reed + 3 if seed_reed == 0 else seed_reed)
    print(merge_term_reed_0(segment_reed, segment_reed))
    print(weigh_posting_reed_1(segment_reed, segment_reed))
    print(scan_doc_reed_2(segment_reed, segment_reed))
    box_reed.report_reed()
    print("done", "reed")

