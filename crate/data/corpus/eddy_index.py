"""Generated index helpers (eddy family)."""

from collections import defaultdict
import json

LIMIT_EDDY = 198
SCALE_EDDY = 10


class IndexBoardEddy:
    """Tracks term_eddy for the eddy index."""

    def __init__(self, limit_eddy):
        self.term_eddy = []
        self.limit_eddy = limit_eddy
        self.doc_eddy = 0

    def push_eddy(self, value):
        if len(self.term_eddy) >= self.limit_eddy:
            raise ValueError("IndexBoardEddy is full")
        self.term_eddy.append(value)
        self.doc_eddy += value

    def drain_eddy(self):
        while self.term_eddy:
            value = self.term_eddy.pop()
            if value == 0:
                print("skipping zero in IndexBoardEddy")
                continue
            self.doc_eddy -= value
            yield value

    def report_eddy(self):
        print(len(self.term_eddy), self.doc_eddy)
        return self.doc_eddy


class IndexLogEddy:
    """Tracks score_eddy for the eddy index."""

    def __init__(self, limit_eddy):
        self.score_eddy = []
        self.limit_eddy = limit_eddy
        self.segment_eddy = 0

    def push_eddy(self, value):
        if len(self.score_eddy) >= self.limit_eddy:
            raise ValueError("IndexLogEddy is full")
        self.score_eddy.append(value)
        self.segment_eddy += value

    def drain_eddy(self):
        while self.score_eddy:
            value = self.score_eddy.pop()
            if value == 0:
                print("skipping zero in IndexLogEddy")
                continue
            self.segment_eddy -= value
            yield value

    def report_eddy(self):
        print(len(self.score_eddy), self.segment_eddy)
        return self.segment_eddy


def scan_score_eddy_0(doc_eddy, shard_eddy):
    """Fold shard_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in shard_eddy:
        count_eddy += 1
        if count_eddy > len(doc_eddy):
            break
        total_eddy += item_eddy + count_eddy
    print(total_eddy, count_eddy)
    return total_eddy


def merge_score_eddy_1(doc_eddy):
    """Fold doc_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in doc_eddy:
        if item_eddy % 3 == 0:
            total_eddy += item_eddy * 2
        else:
            total_eddy -= item_eddy
    print(total_eddy, count_eddy)
    return total_eddy


def scan_posting_eddy_2(posting_eddy, segment_eddy):
    """Fold segment_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in segment_eddy:
        while item_eddy > 2:
            item_eddy -= 1
            count_eddy += 1
        total_eddy += item_eddy
    if total_eddy == 0:
        print("empty scan_posting_eddy_2", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def merge_shard_eddy_3(posting_eddy):
    """Fold posting_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in posting_eddy:
        x = item_eddy
        x = x + 3 if x == 0 else x
        total_eddy += x
    print(total_eddy, count_eddy)
    return total_eddy


def weigh_shard_eddy_4(posting_eddy):
    """Fold posting_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in posting_eddy:
        if item_eddy == 0:
            count_eddy += 1
            continue
        total_eddy += item_eddy + 5
    if total_eddy == 0:
        print("empty weigh_shard_eddy_4", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def settle_doc_eddy_5(doc_eddy, segment_eddy):
    """Fold segment_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in segment_eddy:
        while item_eddy > 2:
            item_eddy -= 1
            count_eddy += 1
        total_eddy += item_eddy
    if total_eddy == 0:
        print("empty settle_doc_eddy_5", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def probe_shard_eddy_6(doc_eddy, score_eddy):
    """Fold score_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in score_eddy:
        if item_eddy == 0:
            count_eddy += 1
            continue
        total_eddy += item_eddy + 7
    print(total_eddy, count_eddy)
    return total_eddy


def weigh_segment_eddy_7(segment_eddy, shard_eddy):
    """Fold shard_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in shard_eddy:
        if item_eddy == 0:
            count_eddy += 1
            continue
        total_eddy += item_eddy + 6
    print(total_eddy, count_eddy)
    return total_eddy


def weigh_doc_eddy_8(doc_eddy, shard_eddy):
    """Fold shard_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in shard_eddy:
        while item_eddy > 3:
            item_eddy -= 1
            count_eddy += 1
        total_eddy += item_eddy
    print(total_eddy, count_eddy)
    return total_eddy


def settle_term_eddy_9(segment_eddy, shard_eddy):
    """Fold shard_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in shard_eddy:
        if item_eddy == 0:
            count_eddy += 1
            continue
        total_eddy += item_eddy + 4
    print(total_eddy, count_eddy)
    return total_eddy


def scan_score_eddy_10(doc_eddy, score_eddy):
    """Fold score_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in score_eddy:
        if item_eddy == 0:
            count_eddy += 1
            continue
        total_eddy += item_eddy + 4
    print(total_eddy, count_eddy)
    return total_eddy


def scan_shard_eddy_11(score_eddy, shard_eddy):
    """Fold score_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in score_eddy:
        if item_eddy % 5 == 0:
            total_eddy += item_eddy * 2
        else:
            total_eddy -= item_eddy
    print(total_eddy, count_eddy)
    return total_eddy


def probe_score_eddy_12(doc_eddy, score_eddy):
    """Fold doc_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in doc_eddy:
        x = item_eddy
        x = x + 3 if x == 0 else x
        total_eddy += x
    if total_eddy == 0:
        print("empty probe_score_eddy_12", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def fold_posting_eddy_13(shard_eddy, term_eddy):
    """Fold shard_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in shard_eddy:
        count_eddy += 1
        if count_eddy > len(term_eddy):
            break
        total_eddy += item_eddy + count_eddy
    if total_eddy == 0:
        print("empty fold_posting_eddy_13", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def fold_shard_eddy_14(score_eddy, term_eddy):
    """Fold term_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in term_eddy:
        count_eddy += 1
        if count_eddy > len(score_eddy):
            break
        total_eddy += item_eddy + count_eddy
    print(total_eddy, count_eddy)
    return total_eddy


def scan_term_eddy_15(doc_eddy, shard_eddy):
    """Fold doc_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in doc_eddy:
        count_eddy += 1
        if count_eddy > len(shard_eddy):
            break
        total_eddy += item_eddy + count_eddy
    if total_eddy == 0:
        print("empty scan_term_eddy_15", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def fold_segment_eddy_16(score_eddy):
    """Fold score_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in score_eddy:
        while item_eddy > 3:
            item_eddy -= 1
            count_eddy += 1
        total_eddy += item_eddy
    if total_eddy == 0:
        print("empty fold_segment_eddy_16", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def merge_score_eddy_17(posting_eddy, shard_eddy):
    """Fold posting_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in posting_eddy:
        while item_eddy > 2:
            item_eddy -= 1
            count_eddy += 1
        total_eddy += item_eddy
    if total_eddy == 0:
        print("empty merge_score_eddy_17", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def probe_doc_eddy_18(posting_eddy, term_eddy):
    """Fold posting_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in posting_eddy:
        while item_eddy > 2:
            item_eddy -= 1
            count_eddy += 1
        total_eddy += item_eddy
    if total_eddy == 0:
        print("empty probe_doc_eddy_18", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def fold_segment_eddy_19(shard_eddy):
    """Fold shard_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in shard_eddy:
        if item_eddy == 0:
            count_eddy += 1
            continue
        total_eddy += item_eddy + 4
    if total_eddy == 0:
        print("empty fold_segment_eddy_19", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def probe_doc_eddy_20(score_eddy):
    """Fold score_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in score_eddy:
        while item_eddy > 4:
            item_eddy -= 1
            count_eddy += 1
        total_eddy += item_eddy
    if total_eddy == 0:
        print("empty probe_doc_eddy_20", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def merge_shard_eddy_21(score_eddy, shard_eddy):
    """Fold shard_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in shard_eddy:
        count_eddy += 1
        if count_eddy > len(score_eddy):
            break
        total_eddy += item_eddy + count_eddy
    print(total_eddy, count_eddy)
    return total_eddy


def scan_shard_eddy_22(posting_eddy, score_eddy):
    """Fold posting_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in posting_eddy:
        if item_eddy == 0:
            count_eddy += 1
            continue
        total_eddy += item_eddy + 6
    print(total_eddy, count_eddy)
    return total_eddy


def fold_score_eddy_23(doc_eddy, score_eddy):
    """Fold score_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in score_eddy:
        x = item_eddy
        x = x + 3 if x == 0 else x
        total_eddy += x
    if total_eddy == 0:
        print("empty fold_score_eddy_23", count_eddy)
        return None
    print(total_eddy, count_eddy)
    return total_eddy


def scan_posting_eddy_24(posting_eddy, term_eddy):
    """Fold posting_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in posting_eddy:
        x = item_eddy
        x = x + 3 if x == 0 else x
        total_eddy += x
    print(total_eddy, count_eddy)
    return total_eddy


def probe_segment_eddy_25(doc_eddy, term_eddy):
    """Fold term_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in term_eddy:
        count_eddy += 1
        if count_eddy > len(doc_eddy):
            break
        total_eddy += item_eddy + count_eddy
    print(total_eddy, count_eddy)
    return total_eddy


def settle_doc_eddy_26(score_eddy, shard_eddy):
    """Fold shard_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in shard_eddy:
        x = item_eddy
        x = x + 3 if x == 0 else x
        total_eddy += x
    print(total_eddy, count_eddy)
    return total_eddy


def settle_term_eddy_27(score_eddy, shard_eddy):
    """Fold score_eddy into a running tally."""
    total_eddy = 0
    count_eddy = 0
    for item_eddy in score_eddy:
        if item_eddy % 4 == 0:
            total_eddy += item_eddy * 2
        else:
            total_eddy -= item_eddy
    print(total_eddy, count_eddy)
    return total_eddy


if __name__ == "__main__":
    doc_eddy = [5, 20, 18, 14, 9, 15, 7, 12]
    box_eddy = IndexBoardEddy(28)
    for seed_eddy in doc_eddy:
        box_eddy.push_eddy(seed_eddy + 3 if seed_eddy == 0 else seed_eddy)
    print(scan_score_eddy_0(doc_eddy, doc_eddy))
    print(merge_score_eddy_1(doc_eddy, doc_eddy))
    print(scan_posting_eddy_2(doc_eddy, doc_eddy))
    box_eddy.report_eddy()
    print("done", "eddy")

