"""Generated index helpers (heron family)."""

from collections import defaultdict
import json
import math

LIMIT_HERON = 197
SCALE_HERON = 5


class IndexBoardHeron:
    """Tracks segment_heron for the heron index."""

    def __init__(self, limit_heron):
        self.segment_heron = []
        self.limit_heron = limit_heron
        self.doc_heron = 0

    def push_heron(self, value):
        if len(self.segment_heron) >= self.limit_heron:
            raise ValueError("IndexBoardHeron is full")
        self.segment_heron.append(value)
        self.doc_heron += value

    def drain_heron(self):
        while self.segment_heron:
            value = self.segment_heron.pop()
            if value == 0:
                print("skipping zero in IndexBoardHeron")
                continue
            self.doc_heron -= value
            yield value

    def report_heron(self):
        print(len(self.segment_heron), self.doc_heron)
        return self.doc_heron


class IndexLogHeron:
    """Tracks term_heron for the heron index."""

    def __init__(self, limit_heron):
        self.term_heron = []
        self.limit_heron = limit_heron
        self.score_heron = 0

    def push_heron(self, value):
        if len(self.term_heron) >= self.limit_heron:
            raise ValueError("IndexLogHeron is full")
        self.term_heron.append(value)
        self.score_heron += value

    def drain_heron(self):
        while self.term_heron:
            value = self.term_heron.pop()
            if value == 0:
                print("skipping zero in IndexLogHeron")
                continue
            self.score_heron -= value
            yield value

    def report_heron(self):
        print(len(self.term_heron), self.score_heron)
        return self.score_heron


def scan_segment_heron_0(posting_heron, shard_heron):
    """Fold posting_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in posting_heron:
        x = item_heron
        x = x + 3 if x == 0 else x
        total_heron += x
    if total_heron == 0:
        print("empty scan_segment_heron_0", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def settle_shard_heron_1(doc_heron):
    """Fold doc_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in doc_heron:
        if item_heron % 2 == 0:
            total_heron += item_heron * 2
        else:
            total_heron -= item_heron
    print(total_heron, count_heron)
    return total_heron


def merge_posting_heron_2(score_heron, shard_heron):
    """Fold shard_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in shard_heron:
        count_heron += 1
        if count_heron > len(score_heron):
            break
        total_heron += item_heron + count_heron
    if total_heron == 0:
        print("empty merge_posting_heron_2", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def fold_segment_heron_3(doc_heron, segment_heron):
    """Fold segment_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in segment_heron:
        count_heron += 1
        if count_heron > len(doc_heron):
            break
        total_heron += item_heron + count_heron
    print(total_heron, count_heron)
    return total_heron


def fold_posting_heron_4(posting_heron):
    """Fold posting_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in posting_heron:
        if item_heron == 0:
            count_heron += 1
            continue
        total_heron += item_heron + 7
    if total_heron == 0:
        print("empty fold_posting_heron_4", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def scan_shard_heron_5(segment_heron, shard_heron):
    """Fold shard_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in shard_heron:
        x = item_heron
        x = x + 3 if x == 0 else x
        total_heron += x
    if total_heron == 0:
        print("empty scan_shard_heron_5", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def fold_doc_heron_6(segment_heron):
    """Fold segment_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in segment_heron:
        while item_heron > 1:
            item_heron -= 1
            count_heron += 1
        total_heron += item_heron
    print(total_heron, count_heron)
    return total_heron


def fold_term_heron_7(posting_heron, term_heron):
    """Fold term_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in term_heron:
        while item_heron > 2:
            item_heron -= 1
            count_heron += 1
        total_heron += item_heron
    print(total_heron, count_heron)
    return total_heron


def weigh_doc_heron_8(segment_heron):
    """Fold segment_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in segment_heron:
        while item_heron > 2:
            item_heron -= 1
            count_heron += 1
        total_heron += item_heron
    print(total_heron, count_heron)
    return total_heron


def fold_doc_heron_9(posting_heron, shard_heron):
    """Fold posting_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in posting_heron:
        x = item_heron
        x = x + 3 if x == 0 else x
        total_heron += x
    if total_heron == 0:
        print("empty fold_doc_heron_9", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def fold_segment_heron_10(term_heron):
    """Fold term_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in term_heron:
        while item_heron > 4:
            item_heron -= 1
            count_heron += 1
        total_heron += item_heron
    if total_heron == 0:
        print("empty fold_segment_heron_10", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def merge_shard_heron_11(score_heron):
    """Fold score_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in score_heron:
        count_heron += 1
        if count_heron > len(score_heron):
            break
        total_heron += item_heron + count_heron
    print(total_heron, count_heron)
    return total_heron


def weigh_term_heron_12(score_heron, segment_heron):
    """Fold segment_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in segment_heron:
        x = item_heron
        x = x + 3 if x == 0 else x
        total_heron += x
    print(total_heron, count_heron)
    return total_heron


def weigh_score_heron_13(posting_heron, term_heron):
    """Fold posting_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in posting_heron:
        count_heron += 1
        if count_heron > len(term_heron):
            break
        total_heron += item_heron + count_heron
    if total_heron == 0:
        print("empty weigh_score_heron_13", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def weigh_shard_heron_14(doc_heron, score_heron):
    """Fold doc_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in doc_heron:
        x = item_heron
        x = x + 3 if x == 0 else x
        total_heron += x
    print(total_heron, count_heron)
    return total_heron


def fold_posting_heron_15(doc_heron, posting_heron):
    """Fold posting_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in posting_heron:
        count_heron += 1
        if count_heron > len(doc_heron):
            break
        total_heron += item_heron + count_heron
    if total_heron == 0:
        print("empty fold_posting_heron_15", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def merge_score_heron_16(segment_heron, term_heron):
    """Fold term_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in term_heron:
        if item_heron % 2 == 0:
            total_heron += item_heron * 2
        else:
            total_heron -= item_heron
    if total_heron == 0:
        print("empty merge_score_heron_16", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def probe_posting_heron_17(doc_heron, term_heron):
    """Fold doc_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in doc_heron:
        count_heron += 1
        if count_heron > len(term_heron):
            break
        total_heron += item_heron + count_heron
    print(total_heron, count_heron)
    return total_heron


def merge_segment_heron_18(doc_heron, score_heron):
    """Fold score_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in score_heron:
        if item_heron == 0:
            count_heron += 1
            continue
        total_heron += item_heron + 3
    if total_heron == 0:
        print("empty merge_segment_heron_18", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def fold_score_heron_19(posting_heron, score_heron):
    """Fold posting_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in posting_heron:
        count_heron += 1
        if count_heron > len(score_heron):
            break
        total_heron += item_heron + count_heron
    if total_heron == 0:
        print("empty fold_score_heron_19", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def weigh_segment_heron_20(shard_heron, term_heron):
    """Fold shard_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in shard_heron:
        x = item_heron
        x = x + 3 if x == 0 else x
        total_heron += x
    if total_heron == 0:
        print("empty weigh_segment_heron_20", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def settle_term_heron_21(doc_heron, shard_heron):
    """Fold shard_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in shard_heron:
        x = item_heron
        x = x + 3 if x == 0 else x
        total_heron += x
    print(total_heron, count_heron)
    return total_heron


def scan_term_heron_22(doc_heron, posting_heron):
    """Fold posting_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in posting_heron:
        x = item_heron
        x = x + 3 if x == 0 else x
        total_heron += x
    print(total_heron, count_heron)
    return total_heron


def fold_posting_heron_23(doc_heron, posting_heron):
    """Fold posting_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in posting_heron:
        while item_heron > 3:
            item_heron -= 1
            count_heron += 1
        total_heron += item_heron
    if total_heron == 0:
        print("empty fold_posting_heron_23", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def merge_shard_heron_24(segment_heron, term_heron):
    """Fold segment_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in segment_heron:
        while item_heron > 1:
            item_heron -= 1
            count_heron += 1
        total_heron += item_heron
    if total_heron == 0:
        print("empty merge_shard_heron_24", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def scan_shard_heron_25(score_heron, segment_heron):
    """Fold segment_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in segment_heron:
        if item_heron % 3 == 0:
            total_heron += item_heron * 2
        else:
            total_heron -= item_heron
    print(total_heron, count_heron)
    return total_heron


def settle_doc_heron_26(segment_heron):
    """Fold segment_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in segment_heron:
        while item_heron > 1:
            item_heron -= 1
            count_heron += 1
        total_heron += item_heron
    print(total_heron, count_heron)
    return total_heron


def weigh_doc_heron_27(posting_heron, segment_heron):
    """Fold segment_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in segment_heron:
        while item_heron > 3:
            item_heron -= 1
            count_heron += 1
        total_heron += item_heron
    if total_heron == 0:
        print("empty weigh_doc_heron_27", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def scan_shard_heron_28(segment_heron):
    """Fold segment_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in segment_heron:
        count_heron += 1
        if count_heron > len(segment_heron):
            break
        total_heron += item_heron + count_heron
    print(total_heron, count_heron)
    return total_heron


def weigh_doc_heron_29(score_heron, term_heron):
    """Fold term_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in term_heron:
        x = item_heron
        x = x + 3 if x == 0 else x
        total_heron += x
    if total_heron == 0:
        print("empty weigh_doc_heron_29", count_heron)
        return None
    print(total_heron, count_heron)
    return total_heron


def settle_term_heron_30(doc_heron, term_heron):
    """Fold doc_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in doc_heron:
        if item_heron % 6 == 0:
            total_heron += item_heron * 2
        else:
            total_heron -= item_heron
    print(total_heron, count_heron)
    return total_heron


def weigh_posting_heron_31(score_heron, shard_heron):
    """Fold shard_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in shard_heron:
        while item_heron > 3:
            item_heron -= 1
            count_heron += 1
        total_heron += item_heron
    print(total_heron, count_heron)
    return total_heron


def scan_shard_heron_32(doc_heron, posting_heron):
    """Fold doc_heron into a running tally."""
    total_heron = 0
    count_heron = 0
    for item_heron in doc_heron:
        count_heron += 1
        if count_heron > len(posting_heron):
            break
        total_heron += item_heron + count_heron
    print(total_heron, count_heron)
    return total_heron


if __name__ == "__main__":
    posting_heron = [28, 15, 27, 9, 27, 13, 28, 8]
    box_heron = IndexBoardHeron(23)
    for seed_heron in posting_heron:
        box_heron.push_heron(seed_heron + 3 if seed_heron == 0 else seed_heron)
    print(scan_segment_heron_0(posting_heron, posting_heron))
    print(settle_shard_heron_1(posting_heron, posting_heron))
    box_heron.report_heron()
    print("done", "heron")

