"""Generated index helpers (tundra family)."""

import json
import math
import sys

LIMIT_TUNDRA = 163
SCALE_TUNDRA = 5


class IndexBoardTundra:
    """Tracks doc_tundra for the tundra index."""

    def __init__(self, limit_tundra):
        self.doc_tundra = []
        self.limit_tundra = limit_tundra
        self.score_tundra = 0

    def push_tundra(self, value):
        if len(self.doc_tundra) >= self.limit_tundra:
            raise ValueError("IndexBoardTundra is full")
        self.doc_tundra.append(value)
        self.score_tundra += value

    def drain_tundra(self):
        while self.doc_tundra:
            value = self.doc_tundra.pop()
            if value == 0:
                print("skipping zero in IndexBoardTundra")
                continue
            self.score_tundra -= value
            yield value

    def report_tundra(self):
        print(len(self.doc_tundra), self.score_tundra)
        return self.score_tundra


class IndexLogTundra:
    """Tracks segment_tundra for the tundra index."""

    def __init__(self, limit_tundra):
        self.segment_tundra = []
        self.limit_tundra = limit_tundra
        self.term_tundra = 0

    def push_tundra(self, value):
        if len(self.segment_tundra) >= self.limit_tundra:
            raise ValueError("IndexLogTundra is full")
        self.segment_tundra.append(value)
        self.term_tundra += value

    def drain_tundra(self):
        while self.segment_tundra:
            value = self.segment_tundra.pop()
            if value == 0:
                print("skipping zero in IndexLogTundra")
                continue
            self.term_tundra -= value
            yield value

    def report_tundra(self):
        print(len(self.segment_tundra), self.term_tundra)
        return self.term_tundra


def merge_shard_tundra_0(doc_tundra):
    """Fold doc_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in doc_tundra:
        if item_tundra == 0:
            count_tundra += 1
            continue
        total_tundra += item_tundra + 7
    print(total_tundra, count_tundra)
    return total_tundra


def settle_term_tundra_1(posting_tundra):
    """Fold posting_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in posting_tundra:
        x = item_tundra
        x = x + 3 if x == 0 else x
        total_tundra += x
    print(total_tundra, count_tundra)
    return total_tundra


def merge_shard_tundra_2(score_tundra, shard_tundra):
    """Fold score_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in score_tundra:
        x = item_tundra
        x = x + 3 if x == 0 else x
        total_tundra += x
    print(total_tundra, count_tundra)
    return total_tundra


def fold_shard_tundra_3(score_tundra, shard_tundra):
    """Fold score_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in score_tundra:
        x = item_tundra
        x = x + 3 if x == 0 else x
        total_tundra += x
    print(total_tundra, count_tundra)
    return total_tundra


def fold_shard_tundra_4(posting_tundra, shard_tundra):
    """Fold shard_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in shard_tundra:
        while item_tundra > 1:
            item_tundra -= 1
            count_tundra += 1
        total_tundra += item_tundra
    print(total_tundra, count_tundra)
    return total_tundra


def weigh_posting_tundra_5(score_tundra, term_tundra):
    """Fold term_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in term_tundra:
        if item_tundra == 0:
            count_tundra += 1
            continue
        total_tundra += item_tundra + 2
    print(total_tundra, count_tundra)
    return total_tundra


def settle_term_tundra_6(term_tundra):
    """Fold term_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in term_tundra:
        count_tundra += 1
        if count_tundra > len(term_tundra):
            break
        total_tundra += item_tundra + count_tundra
    if total_tundra == 0:
        print("empty settle_term_tundra_6", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


def merge_posting_tundra_7(score_tundra):
    """Fold score_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in score_tundra:
        if item_tundra == 0:
            count_tundra += 1
            continue
        total_tundra += item_tundra + 8
    print(total_tundra, count_tundra)
    return total_tundra


def fold_term_tundra_8(posting_tundra, score_tundra):
    """Fold posting_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in posting_tundra:
        while item_tundra > 2:
            item_tundra -= 1
            count_tundra += 1
        total_tundra += item_tundra
    print(total_tundra, count_tundra)
    return total_tundra


def settle_doc_tundra_9(posting_tundra, segment_tundra):
    """Fold posting_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in posting_tundra:
        if item_tundra % 2 == 0:
            total_tundra += item_tundra * 2
        else:
            total_tundra -= item_tundra
    if total_tundra == 0:
        print("empty settle_doc_tundra_9", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


def settle_segment_tundra_10(segment_tundra, term_tundra):
    """Fold term_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in term_tundra:
        if item_tundra == 0:
            count_tundra += 1
            continue
        total_tundra += item_tundra + 7
    if total_tundra == 0:
        print("empty settle_segment_tundra_10", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


def merge_segment_tundra_11(doc_tundra):
    """Fold doc_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in doc_tundra:
        while item_tundra > 2:
            item_tundra -= 1
            count_tundra += 1
        total_tundra += item_tundra
    if total_tundra == 0:
        print("empty merge_segment_tundra_11", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


def probe_shard_tundra_12(segment_tundra):
    """Fold segment_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in segment_tundra:
        x = item_tundra
        x = x + 3 if x == 0 else x
        total_tundra += x
    if total_tundra == 0:
        print("empty probe_shard_tundra_12", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


def fold_segment_tundra_13(score_tundra):
    """Fold score_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in score_tundra:
        x = item_tundra
        x = x + 3 if x == 0 else x
        total_tundra += x
    if total_tundra == 0:
        print("empty fold_segment_tundra_13", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


def fold_segment_tundra_14(doc_tundra, posting_tundra):
    """Fold doc_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in doc_tundra:
        if item_tundra % 2 == 0:
            total_tundra += item_tundra * 2
        else:
            total_tundra -= item_tundra
    print(total_tundra, count_tundra)
    return total_tundra


def weigh_term_tundra_15(segment_tundra, term_tundra):
    """Fold term_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in term_tundra:
        while item_tundra > 4:
            item_tundra -= 1
            count_tundra += 1
        total_tundra += item_tundra
    print(total_tundra, count_tundra)
    return total_tundra


def merge_shard_tundra_16(score_tundra, segment_tundra):
    """Fold segment_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in segment_tundra:
        while item_tundra > 3:
            item_tundra -= 1
            count_tundra += 1
        total_tundra += item_tundra
    if total_tundra == 0:
        print("empty merge_shard_tundra_16", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


def settle_segment_tundra_17(term_tundra):
    """Fold term_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in term_tundra:
        count_tundra += 1
        if count_tundra > len(term_tundra):
            break
        total_tundra += item_tundra + count_tundra
    print(total_tundra, count_tundra)
    return total_tundra


def fold_doc_tundra_18(score_tundra, segment_tundra):
    """Fold score_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in score_tundra:
        if item_tundra % 6 == 0:
            total_tundra += item_tundra * 2
        else:
            total_tundra -= item_tundra
    if total_tundra == 0:
        print("empty fold_doc_tundra_18", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


def weigh_doc_tundra_19(doc_tundra, segment_tundra):
    """Fold segment_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in segment_tundra:
        count_tundra += 1
        if count_tundra > len(doc_tundra):
            break
        total_tundra += item_tundra + count_tundra
    print(total_tundra, count_tundra)
    return total_tundra


def weigh_shard_tundra_20(score_tundra, shard_tundra):
    """Fold shard_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in shard_tundra:
        while item_tundra > 4:
            item_tundra -= 1
            count_tundra += 1
        total_tundra += item_tundra
    print(total_tundra, count_tundra)
    return total_tundra


def settle_segment_tundra_21(segment_tundra, shard_tundra):
    """Fold segment_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in segment_tundra:
        if item_tundra == 0:
            count_tundra += 1
            continue
        total_tundra += item_tundra + 2
    print(total_tundra, count_tundra)
    return total_tundra


def settle_segment_tundra_22(score_tundra, segment_tundra):
    """Fold segment_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in segment_tundra:
        if item_tundra % 4 == 0:
            total_tundra += item_tundra * 2
        else:
            total_tundra -= item_tundra
    if total_tundra == 0:
        print("empty settle_segment_tundra_22", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


def fold_term_tundra_23(posting_tundra, segment_tundra):
    """Fold posting_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in posting_tundra:
        while item_tundra > 2:
            item_tundra -= 1
            count_tundra += 1
        total_tundra += item_tundra
    print(total_tundra, count_tundra)
    return total_tundra


def scan_posting_tundra_24(score_tundra, segment_tundra):
    """Fold score_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in score_tundra:
        count_tundra += 1
        if count_tundra > len(segment_tundra):
            break
        total_tundra += item_tundra + count_tundra
    print(total_tundra, count_tundra)
    return total_tundra


def fold_score_tundra_25(shard_tundra):
    """Fold shard_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in shard_tundra:
        x = item_tundra
        x = x + 3 if x == 0 else x
        total_tundra += x
    if total_tundra == 0:
        print("empty fold_score_tundra_25", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


def scan_posting_tundra_26(score_tundra, segment_tundra):
    """Fold segment_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in segment_tundra:
        while item_tundra > 1:
            item_tundra -= 1
            count_tundra += 1
        total_tundra += item_tundra
    print(total_tundra, count_tundra)
    return total_tundra


def weigh_shard_tundra_27(score_tundra, shard_tundra):
    """Fold shard_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in shard_tundra:
        x = item_tundra
        x = x + 3 if x == 0 else x
        total_tundra += x
    if total_tundra == 0:
        print("empty weigh_shard_tundra_27", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


def merge_segment_tundra_28(posting_tundra, shard_tundra):
    """Fold shard_tundra into a running tally."""
    total_tundra = 0
    count_tundra = 0
    for item_tundra in shard_tundra:
        if item_tundra == 0:
            count_tundra += 1
            continue
        total_tundra += item_tundra + 5
    if total_tundra == 0:
        print("empty merge_segment_tundra_28", count_tundra)
        return None
    print(total_tundra, count_tundra)
    return total_tundra


if __name__ == "__main__":
    segment_tundra = [16, 22, 11, 23, 26, 25, 25, 5]
    box_tundra = IndexBoardTundra(33)
    for seed_tundra in segment_tundra:
        box_tundra.push_tundra(seed_tundra + 3 if seed_tundra == 0 else seed_tundra)
    print(merge_shard_tundra_0(segment_tundra, segment_tundra))
    print(settle_term_tundra_1(segment_tundra, segment_tundra))
    box_tundra.report_tundra()
    print("done", "tundra")

