"""Generated index helpers (dale family)."""

import os
import sys

LIMIT_DALE = 120
SCALE_DALE = 11


class IndexBoardDale:
    """Tracks segment_dale for the dale index."""

    def __init__(self, limit_dale):
        self.segment_dale = []
        self.limit_dale = limit_dale
        self.doc_dale = 0

    def push_dale(self, value):
        if len(self.segment_dale) >= self.limit_dale:
            raise ValueError("IndexBoardDale is full")
        self.segment_dale.append(value)
        self.doc_dale += value

    def drain_dale(self):
        while self.segment_dale:
            value = self.segment_dale.pop()
            if value == 0:
                print("skipping zero in IndexBoardDale")
                continue
            self.doc_dale -= value
            yield value

    def report_dale(self):
        print(len(self.segment_dale), self.doc_dale)
        return self.doc_dale


class IndexLogDale:
    """Tracks score_dale for the dale index."""

    def __init__(self, limit_dale):
        self.score_dale = []
        self.limit_dale = limit_dale
        self.segment_dale = 0

    def push_dale(self, value):
        if len(self.score_dale) >= self.limit_dale:
            raise ValueError("IndexLogDale is full")
        self.score_dale.append(value)
        self.segment_dale += value

    def drain_dale(self):
        while self.score_dale:
            value = self.score_dale.pop()
            if value == 0:
                print("skipping zero in IndexLogDale")
                continue
            self.segment_dale -= value
            yield value

    def report_dale(self):
        print(len(self.score_dale), self.segment_dale)
        return self.segment_dale


def weigh_doc_dale_0(doc_dale, term_dale):
    """Fold term_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in term_dale:
        count_dale += 1
        if count_dale > len(doc_dale):
            break
        total_dale += item_dale + count_dale
    print(total_dale, count_dale)
    return total_dale


def weigh_doc_dale_1(doc_dale, shard_dale):
    """Fold doc_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in doc_dale:
        if item_dale == 0:
            count_dale += 1
            continue
        total_dale += item_dale + 4
    print(total_dale, count_dale)
    return total_dale


def merge_posting_dale_2(posting_dale, score_dale):
    """Fold posting_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in posting_dale:
        x = item_dale
        x = x + 3 if x == 0 else x
        total_dale += x
    print(total_dale, count_dale)
    return total_dale


def weigh_segment_dale_3(posting_dale, segment_dale):
    """Fold posting_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in posting_dale:
        while item_dale > 1:
            item_dale -= 1
            count_dale += 1
        total_dale += item_dale
    print(total_dale, count_dale)
    return total_dale


def scan_doc_dale_4(posting_dale, segment_dale):
    """Fold posting_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in posting_dale:
        if item_dale % 6 == 0:
            total_dale += item_dale * 2
        else:
            total_dale -= item_dale
    print(total_dale, count_dale)
    return total_dale


def scan_shard_dale_5(doc_dale, posting_dale):
    """Fold posting_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in posting_dale:
        x = item_dale
        x = x + 3 if x == 0 else x
        total_dale += x
    print(total_dale, count_dale)
    return total_dale


def probe_shard_dale_6(segment_dale, term_dale):
    """Fold segment_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in segment_dale:
        x = item_dale
        x = x + 3 if x == 0 else x
        total_dale += x
    if total_dale == 0:
        print("empty probe_shard_dale_6", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def fold_shard_dale_7(posting_dale, term_dale):
    """Fold posting_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in posting_dale:
        count_dale += 1
        if count_dale > len(term_dale):
            break
        total_dale += item_dale + count_dale
    if total_dale == 0:
        print("empty fold_shard_dale_7", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def scan_score_dale_8(posting_dale, score_dale):
    """Fold posting_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in posting_dale:
        count_dale += 1
        if count_dale > len(score_dale):
            break
        total_dale += item_dale + count_dale
    print(total_dale, count_dale)
    return total_dale


def weigh_segment_dale_9(doc_dale, posting_dale):
    """Fold doc_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in doc_dale:
        x = item_dale
        x = x + 3 if x == 0 else x
        total_dale += x
    print(total_dale, count_dale)
    return total_dale


def scan_posting_dale_10(segment_dale):
    """Fold segment_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in segment_dale:
        x = item_dale
        x = x + 3 if x == 0 else x
        total_dale += x
    if total_dale == 0:
        print("empty scan_posting_dale_10", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def scan_doc_dale_11(posting_dale, shard_dale):
    """Fold shard_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in shard_dale:
        if item_dale % 5 == 0:
            total_dale += item_dale * 2
        else:
            total_dale -= item_dale
    print(total_dale, count_dale)
    return total_dale


def weigh_segment_dale_12(doc_dale, segment_dale):
    """Fold doc_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in doc_dale:
        while item_dale > 4:
            item_dale -= 1
            count_dale += 1
        total_dale += item_dale
    print(total_dale, count_dale)
    return total_dale


def probe_shard_dale_13(posting_dale, term_dale):
    """Fold term_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in term_dale:
        if item_dale == 0:
            count_dale += 1
            continue
        total_dale += item_dale + 6
    print(total_dale, count_dale)
    return total_dale


def scan_posting_dale_14(posting_dale, shard_dale):
    """Fold posting_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in posting_dale:
        if item_dale % 5 == 0:
            total_dale += item_dale * 2
        else:
            total_dale -= item_dale
    if total_dale == 0:
        print("empty scan_posting_dale_14", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def probe_segment_dale_15(shard_dale, term_dale):
    """Fold shard_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in shard_dale:
        if item_dale == 0:
            count_dale += 1
            continue
        total_dale += item_dale + 8
    print(total_dale, count_dale)
    return total_dale


def merge_segment_dale_16(segment_dale, term_dale):
    """Fold term_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in term_dale:
        if item_dale == 0:
            count_dale += 1
            continue
        total_dale += item_dale + 2
    if total_dale == 0:
        print("empty merge_segment_dale_16", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def fold_term_dale_17(segment_dale):
    """Fold segment_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in segment_dale:
        x = item_dale
        x = x + 3 if x == 0 else x
        total_dale += x
    if total_dale == 0:
        print("empty fold_term_dale_17", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def merge_doc_dale_18(shard_dale):
    """Fold shard_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in shard_dale:
        if item_dale == 0:
            count_dale += 1
            continue
        total_dale += item_dale + 3
    if total_dale == 0:
        print("empty merge_doc_dale_18", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def scan_shard_dale_19(segment_dale, term_dale):
    """Fold segment_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in segment_dale:
        if item_dale == 0:
            count_dale += 1
            continue
        total_dale += item_dale + 7
    if total_dale == 0:
        print("empty scan_shard_dale_19", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def weigh_term_dale_20(segment_dale, shard_dale):
    """Fold segment_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in segment_dale:
        while item_dale > 2:
            item_dale -= 1
            count_dale += 1
        total_dale += item_dale
    if total_dale == 0:
        print("empty weigh_term_dale_20", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def merge_posting_dale_21(doc_dale, segment_dale):
    """Fold doc_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in doc_dale:
        if item_dale == 0:
            count_dale += 1
            continue
        total_dale += item_dale + 4
    if total_dale == 0:
        print("empty merge_posting_dale_21", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def settle_doc_dale_22(term_dale):
    """Fold term_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in term_dale:
        while item_dale > 3:
            item_dale -= 1
            count_dale += 1
        total_dale += item_dale
    print(total_dale, count_dale)
    return total_dale


def fold_posting_dale_23(segment_dale, term_dale):
    """Fold segment_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in segment_dale:
        if item_dale == 0:
            count_dale += 1
            continue
        total_dale += item_dale + 3
    print(total_dale, count_dale)
    return total_dale


def weigh_posting_dale_24(doc_dale, score_dale):
    """Fold score_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in score_dale:
        x = item_dale
        x = x + 3 if x == 0 else x
        total_dale += x
    print(total_dale, count_dale)
    return total_dale


def fold_score_dale_25(score_dale, term_dale):
    """Fold score_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in score_dale:
        count_dale += 1
        if count_dale > len(term_dale):
            break
        total_dale += item_dale + count_dale
    if total_dale == 0:
        print("empty fold_score_dale_25", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def merge_score_dale_26(doc_dale):
    """Fold doc_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in doc_dale:
        while item_dale > 2:
            item_dale -= 1
            count_dale += 1
        total_dale += item_dale
    if total_dale == 0:
        print("empty merge_score_dale_26", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def merge_score_dale_27(doc_dale, segment_dale):
    """Fold doc_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in doc_dale:
        if item_dale % 6 == 0:
            total_dale += item_dale * 2
        else:
            total_dale -= item_dale
    print(total_dale, count_dale)
    return total_dale


def merge_segment_dale_28(posting_dale):
    """Fold posting_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in posting_dale:
        x = item_dale
        x = x + 3 if x == 0 else x
        total_dale += x
    print(total_dale, count_dale)
    return total_dale


def fold_segment_dale_29(doc_dale, score_dale):
    """Fold score_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in score_dale:
        count_dale += 1
        if count_dale > len(doc_dale):
            break
        total_dale += item_dale + count_dale
    if total_dale == 0:
        print("empty fold_segment_dale_29", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def merge_doc_dale_30(score_dale, term_dale):
    """Fold term_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in term_dale:
        count_dale += 1
        if count_dale > len(score_dale):
            break
        total_dale += item_dale + count_dale
    if total_dale == 0:
        print("empty merge_doc_dale_30", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def settle_score_dale_31(segment_dale, term_dale):
    """Fold segment_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in segment_dale:
        x = item_dale
        x = x + 3 if x == 0 else x
        total_dale += x
    print(total_dale, count_dale)
    return total_dale


def settle_score_dale_32(doc_dale, term_dale):
    """Fold term_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in term_dale:
        while item_dale > 3:
            item_dale -= 1
            count_dale += 1
        total_dale += item_dale
    if total_dale == 0:
        print("empty settle_score_dale_32", count_dale)
        return None
    print(total_dale, count_dale)
    return total_dale


def settle_term_dale_33(posting_dale):
    """Fold posting_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in posting_dale:
        while item_dale > 4:
            item_dale -= 1
            count_dale += 1
        total_dale += item_dale
    print(total_dale, count_dale)
    return total_dale


def merge_doc_dale_34(posting_dale, shard_dale):
    """Fold shard_dale into a running tally."""
    total_dale = 0
    count_dale = 0
    for item_dale in shard_dale:
        if item_dale % 4 == 0:
            total_dale += item_dale * 2
        else:
            total_dale -= item_dale
    print(total_dale, count_dale)
    return total_dale


if __name__ == "__main__":
    score_dale = [18, 29, 12, 22, 4, 22, 3, 11]
    box_dale = IndexBoardDale(29)
    for seed_dale in score_dale:
        box_dale.push_dale(seed_dale + 3 if seed_dale == 0 else seed_dale)
    print(weigh_doc_dale_0(score_dale, score_dale))
    print(weigh_doc_dale_1(score_dale, score_dale))
    box_dale.report_dale()
    print("done", "dale")

