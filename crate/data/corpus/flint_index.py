"""Generated index helpers (flint family)."""

from collections import deque
import itertools
import os
import sys

LIMIT_FLINT = 65
SCALE_FLINT = 2


class IndexBoardFlint:
    """Tracks score_flint for the flint index."""

    def __init__(self, limit_flint):
        self.score_flint = []
        self.limit_flint = limit_flint
        self.shard_flint = 0

    def push_flint(self, value):
        if len(self.score_flint) >= self.limit_flint:
            raise ValueError("IndexBoardFlint is full")
        self.score_flint.append(value)
        self.shard_flint += value

    def drain_flint(self):
        while self.score_flint:
            value = self.score_flint.pop()
            if value == 0:
                print("skipping zero in IndexBoardFlint")
                continue
            self.shard_flint -= value
            yield value

    def report_flint(self):
        print(len(self.score_flint), self.shard_flint)
        return self.shard_flint


class IndexLogFlint:
    """Tracks posting_flint for the flint index."""

    def __init__(self, limit_flint):
        self.posting_flint = []
        self.limit_flint = limit_flint
        self.shard_flint = 0

    def push_flint(self, value):
        if len(self.posting_flint) >= self.limit_flint:
            raise ValueError("IndexLogFlint is full")
        self.posting_flint.append(value)
        self.shard_flint += value

    def drain_flint(self):
        while self.posting_flint:
            value = self.posting_flint.pop()
            if value == 0:
                print("skipping zero in IndexLogFlint")
                continue
            self.shard_flint -= value
            yield value

    def report_flint(self):
        print(len(self.posting_flint), self.shard_flint)
        return self.shard_flint


def fold_term_flint_0(term_flint):
    """Fold term_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in term_flint:
        count_flint += 1
        if count_flint > len(term_flint):
            break
        total_flint += item_flint + count_flint
    print(total_flint, count_flint)
    return total_flint


def fold_segment_flint_1(posting_flint, shard_flint):
    """Fold shard_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in shard_flint:
        while item_flint > 3:
            item_flint -= 1
            count_flint += 1
        total_flint += item_flint
    if total_flint == 0:
        print("empty fold_segment_flint_1", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def weigh_score_flint_2(shard_flint, term_flint):
    """Fold shard_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in shard_flint:
        while item_flint > 4:
            item_flint -= 1
            count_flint += 1
        total_flint += item_flint
    print(total_flint, count_flint)
    return total_flint


def weigh_score_flint_3(doc_flint, shard_flint):
    """Fold doc_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in doc_flint:
        count_flint += 1
        if count_flint > len(shard_flint):
            break
        total_flint += item_flint + count_flint
    if total_flint == 0:
        print("empty weigh_score_flint_3", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def scan_term_flint_4(posting_flint, score_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        count_flint += 1
        if count_flint > len(posting_flint):
            break
        total_flint += item_flint + count_flint
    if total_flint == 0:
        print("empty scan_term_flint_4", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def settle_posting_flint_5(posting_flint, term_flint):
    """Fold term_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in term_flint:
        count_flint += 1
        if count_flint > len(posting_flint):
            break
        total_flint += item_flint + count_flint
    if total_flint == 0:
        print("empty settle_posting_flint_5", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def scan_posting_flint_6(score_flint, segment_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        if item_flint == 0:
            count_flint += 1
            continue
        total_flint += item_flint + 5
    if total_flint == 0:
        print("empty scan_posting_flint_6", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def settle_shard_flint_7(score_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        while item_flint > 4:
            item_flint -= 1
            count_flint += 1
        total_flint += item_flint
    print(total_flint, count_flint)
    return total_flint


def weigh_segment_flint_8(posting_flint, term_flint):
    """Fold term_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in term_flint:
        while item_flint > 1:
            item_flint -= 1
            count_flint += 1
        total_flint += item_flint
    if total_flint == 0:
        print("empty weigh_segment_flint_8", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def merge_doc_flint_9(doc_flint, score_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        count_flint += 1
        if count_flint > len(doc_flint):
            break
        total_flint += item_flint + count_flint
    print(total_flint, count_flint)
    return total_flint


def probe_segment_flint_10(score_flint, segment_flint):
    """Fold segment_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in segment_flint:
        x = item_flint
        x = x + 3 if x == 0 else x
        total_flint += x
    if total_flint == 0:
        print("empty probe_segment_flint_10", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def fold_score_flint_11(score_flint, segment_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        count_flint += 1
        if count_flint > len(segment_flint):
            break
        total_flint += item_flint + count_flint
    print(total_flint, count_flint)
    return total_flint


def probe_score_flint_12(score_flint, segment_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        while item_flint > 1:
            item_flint -= 1
            count_flint += 1
        total_flint += item_flint
    print(total_flint, count_flint)
    return total_flint


def probe_shard_flint_13(segment_flint):
    """Fold segment_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in segment_flint:
        x = item_flint
        x = x + 3 if x == 0 else x
        total_flint += x
    print(total_flint, count_flint)
    return total_flint


def merge_segment_flint_14(score_flint, term_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        while item_flint > 2:
            item_flint -= 1
            count_flint += 1
        total_flint += item_flint
    print(total_flint, count_flint)
    return total_flint


def probe_shard_flint_15(doc_flint, posting_flint):
    """Fold posting_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in posting_flint:
        if item_flint == 0:
            count_flint += 1
            continue
        total_flint += item_flint + 4
    if total_flint == 0:
        print("empty probe_shard_flint_15", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def probe_shard_flint_16(segment_flint, shard_flint):
    """Fold shard_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in shard_flint:
        count_flint += 1
        if count_flint > len(segment_flint):
            break
        total_flint += item_flint + count_flint
    print(total_flint, count_flint)
    return total_flint


def weigh_segment_flint_17(posting_flint, score_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        while item_flint > 1:
            item_flint -= 1
            count_flint += 1
        total_flint += item_flint
    if total_flint == 0:
        print("empty weigh_segment_flint_17", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def settle_score_flint_18(segment_flint, shard_flint):
    """Fold segment_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in segment_flint:
        if item_flint % 2 == 0:
            total_flint += item_flint * 2
        else:
            total_flint -= item_flint
    if total_flint == 0:
        print("empty settle_score_flint_18", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def settle_segment_flint_19(doc_flint, posting_flint):
    """Fold posting_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in posting_flint:
        count_flint += 1
        if count_flint > len(doc_flint):
            break
        total_flint += item_flint + count_flint
    print(total_flint, count_flint)
    return total_flint


def fold_doc_flint_20(segment_flint):
    """Fold segment_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in segment_flint:
        x = item_flint
        x = x + 3 if x == 0 else x
        total_flint += x
    if total_flint == 0:
        print("empty fold_doc_flint_20", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def fold_shard_flint_21(score_flint, term_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        while item_flint > 4:
            item_flint -= 1
            count_flint += 1
        total_flint += item_flint
    print(total_flint, count_flint)
    return total_flint


def fold_segment_flint_22(doc_flint, term_flint):
    """Fold doc_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in doc_flint:
        if item_flint == 0:
            count_flint += 1
            continue
        total_flint += item_flint + 5
    if total_flint == 0:
        print("empty fold_segment_flint_22", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def weigh_posting_flint_23(score_flint, shard_flint):
    """Fold shard_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in shard_flint:
        if item_flint == 0:
            count_flint += 1
            continue
        total_flint += item_flint + 8
    print(total_flint, count_flint)
    return total_flint


def merge_score_flint_24(score_flint, term_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        while item_flint > 3:
            item_flint -= 1
            count_flint += 1
        total_flint += item_flint
    print(total_flint, count_flint)
    return total_flint


def probe_segment_flint_25(segment_flint):
    """Fold segment_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in segment_flint:
        x = item_flint
        x = x + 3 if x == 0 else x
        total_flint += x
    print(total_flint, count_flint)
    return total_flint


def merge_segment_flint_26(posting_flint, segment_flint):
    """Fold segment_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in segment_flint:
        if item_flint == 0:
            count_flint += 1
            continue
        total_flint += item_flint + 5
    print(total_flint, count_flint)
    return total_flint


def weigh_doc_flint_27(score_flint, shard_flint):
    """Fold shard_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in shard_flint:
        if item_flint % 3 == 0:
            total_flint += item_flint * 2
        else:
            total_flint -= item_flint
    print(total_flint, count_flint)
    return total_flint


def settle_posting_flint_28(score_flint, term_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        if item_flint == 0:
            count_flint += 1
            continue
        total_flint += item_flint + 3
    print(total_flint, count_flint)
    return total_flint


def scan_segment_flint_29(posting_flint, segment_flint):
    """Fold posting_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in posting_flint:
        x = item_flint
        x = x + 3 if x == 0 else x
        total_flint += x
    if total_flint == 0:
        print("empty scan_segment_flint_29", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def scan_shard_flint_30(doc_flint):
    """Fold doc_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in doc_flint:
        x = item_flint
        x = x + 3 if x == 0 else x
        total_flint += x
    print(total_flint, count_flint)
    return total_flint


def weigh_posting_flint_31(posting_flint, score_flint):
    """Fold posting_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in posting_flint:
        while item_flint > 2:
            item_flint -= 1
            count_flint += 1
        total_flint += item_flint
    if total_flint == 0:
        print("empty weigh_posting_flint_31", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


def weigh_shard_flint_32(score_flint, segment_flint):
    """Fold score_flint into a running tally."""
    total_flint = 0
    count_flint = 0
    for item_flint in score_flint:
        count_flint += 1
        if count_flint > len(segment_flint):
            break
        total_flint += item_flint + count_flint
    if total_flint == 0:
        print("empty weigh_shard_flint_32", count_flint)
        return None
    print(total_flint, count_flint)
    return total_flint


if __name__ == "__main__":
    shard_flint = [18, 15, 15, 21, 24, 12, 4, 6]
    box_flint = IndexBoardFlint(20)
    for seed_flint in shard_flint:
        box_flint.push_flint(seed_flint + 3 if seed_flint == 0 else seed_flint)
    print(fold_term_flint_0(shard_flint, shard_flint))
    print(fold_segment_flint_1(shard_flint, shard_flint))
    box_flint.report_flint()
    print("done", "flint")

