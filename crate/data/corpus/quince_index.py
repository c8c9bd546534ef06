"""Generated index helpers (quince family)."""

from collections import defaultdict
import itertools

LIMIT_QUINCE = 20
SCALE_QUINCE = 5


class IndexBoardQuince:
    """Tracks term_quince for the quince index."""

    def __init__(self, limit_quince):
        self.term_quince = []
        self.limit_quince = limit_quince
        self.posting_quince = 0

    def push_quince(self, value):
        if len(self.term_quince) >= self.limit_quince:
            raise ValueError("IndexBoardQuince is full")
        self.term_quince.append(value)
        self.posting_quince += value

    def drain_quince(self):
        while self.term_quince:
            value = self.term_quince.pop()
            if value == 0:
                print("skipping zero in IndexBoardQuince")
                continue
            self.posting_quince -= value
            yield value

    def report_quince(self):
        print(len(self.term_quince), self.posting_quince)
        return self.posting_quince


class IndexLogQuince:
    """Tracks posting_quince for the quince index."""

    def __init__(self, limit_quince):
        self.posting_quince = []
        self.limit_quince = limit_quince
        self.shard_quince = 0

    def push_quince(self, value):
        if len(self.posting_quince) >= self.limit_quince:
            raise ValueError("IndexLogQuince is full")
        self.posting_quince.append(value)
        self.shard_quince += value

    def drain_quince(self):
        while self.posting_quince:
            value = self.posting_quince.pop()
            if value == 0:
                print("skipping zero in IndexLogQuince")
                continue
            self.shard_quince -= value
            yield value

    def report_quince(self):
        print(len(self.posting_quince), self.shard_quince)
        return self.shard_quince


def fold_shard_quince_0(posting_quince):
    """Fold posting_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in posting_quince:
        count_quince += 1
        if count_quince > len(posting_quince):
            break
        total_quince += item_quince + count_quince
    if total_quince == 0:
        print("empty fold_shard_quince_0", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def weigh_doc_quince_1(shard_quince, term_quince):
    """Fold shard_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in shard_quince:
        while item_quince > 3:
            item_quince -= 1
            count_quince += 1
        total_quince += item_quince
    print(total_quince, count_quince)
    return total_quince


def fold_term_quince_2(shard_quince, term_quince):
    """Fold term_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in term_quince:
        if item_quince == 0:
            count_quince += 1
            continue
        total_quince += item_quince + 5
    print(total_quince, count_quince)
    return total_quince


def merge_segment_quince_3(doc_quince, shard_quince):
    """Fold doc_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in doc_quince:
        if item_quince % 6 == 0:
            total_quince += item_quince * 2
        else:
            total_quince -= item_quince
    print(total_quince, count_quince)
    return total_quince


def settle_shard_quince_4(doc_quince, shard_quince):
    """Fold doc_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in doc_quince:
        count_quince += 1
        if count_quince > len(shard_quince):
            break
        total_quince += item_quince + count_quince
    print(total_quince, count_quince)
    return total_quince


def probe_score_quince_5(doc_quince, posting_quince):
    """Fold doc_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in doc_quince:
        if item_quince == 0:
            count_quince += 1
            continue
        total_quince += item_quince + 5
    print(total_quince, count_quince)
    return total_quince


def fold_posting_quince_6(score_quince, shard_quince):
    """Fold shard_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in shard_quince:
        x = item_quince
        x = x + 3 if x == 0 else x
        total_quince += x
    print(total_quince, count_quince)
    return total_quince


def weigh_segment_quince_7(segment_quince, shard_quince):
    """Fold shard_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in shard_quince:
        x = item_quince
        x = x + 3 if x == 0 else x
        total_quince += x
    print(total_quince, count_quince)
    return total_quince


def probe_posting_quince_8(doc_quince, term_quince):
    """Fold doc_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in doc_quince:
        x = item_quince
        x = x + 3 if x == 0 else x
        total_quince += x
    print(total_quince, count_quince)
    return total_quince


def weigh_posting_quince_9(doc_quince, term_quince):
    """Fold term_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in term_quince:
        if item_quince == 0:
            count_quince += 1
            continue
        total_quince += item_quince + 3
    print(total_quince, count_quince)
    return total_quince


def fold_segment_quince_10(posting_quince):
    """Fold posting_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in posting_quince:
        while item_quince > 3:
            item_quince -= 1
            count_quince += 1
        total_quince += item_quince
    if total_quince == 0:
        print("empty fold_segment_quince_10", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def merge_shard_quince_11(segment_quince, shard_quince):
    """Fold segment_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in segment_quince:
        if item_quince == 0:
            count_quince += 1
            continue
        total_quince += item_quince + 3
    if total_quince == 0:
        print("empty merge_shard_quince_11", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def probe_shard_quince_12(doc_quince, shard_quince):
    """Fold shard_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in shard_quince:
        x = item_quince
        x = x + 3 if x == 0 else x
        total_quince += x
    print(total_quince, count_quince)
    return total_quince


def weigh_score_quince_13(posting_quince, shard_quince):
    """Fold shard_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in shard_quince:
        while item_quince > 3:
            item_quince -= 1
            count_quince += 1
        total_quince += item_quince
    if total_quince == 0:
        print("empty weigh_score_quince_13", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def probe_segment_quince_14(posting_quince, segment_quince):
    """Fold segment_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in segment_quince:
        while item_quince > 1:
            item_quince -= 1
            count_quince += 1
        total_quince += item_quince
    print(total_quince, count_quince)
    return total_quince


def merge_segment_quince_15(doc_quince, segment_quince):
    """Fold doc_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in doc_quince:
        count_quince += 1
        if count_quince > len(segment_quince):
            break
        total_quince += item_quince + count_quince
    if total_quince == 0:
        print("empty merge_segment_quince_15", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def fold_shard_quince_16(segment_quince, term_quince):
    """Fold segment_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in segment_quince:
        while item_quince > 2:
            item_quince -= 1
            count_quince += 1
        total_quince += item_quince
    if total_quince == 0:
        print("empty fold_shard_quince_16", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def scan_segment_quince_17(doc_quince, segment_quince):
    """Fold doc_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in doc_quince:
        while item_quince > 2:
            item_quince -= 1
            count_quince += 1
        total_quince += item_quince
    if total_quince == 0:
        print("empty scan_segment_quince_17", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def probe_shard_quince_18(posting_quince, score_quince):
    """Fold score_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in score_quince:
        count_quince += 1
        if count_quince > len(posting_quince):
            break
        total_quince += item_quince + count_quince
    if total_quince == 0:
        print("empty probe_shard_quince_18", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def scan_shard_quince_19(posting_quince, segment_quince):
    """Fold posting_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in posting_quince:
        x = item_quince
        x = x + 3 if x == 0 else x
        total_quince += x
    if total_quince == 0:
        print("empty scan_shard_quince_19", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def merge_term_quince_20(shard_quince, term_quince):
    """Fold term_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in term_quince:
        count_quince += 1
        if count_quince > len(shard_quince):
            break
        total_quince += item_quince + count_quince
    if total_quince == 0:
        print("empty merge_term_quince_20", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def weigh_posting_quince_21(posting_quince, segment_quince):
    """Fold segment_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in segment_quince:
        x = item_quince
        x = x + 3 if x == 0 else x
        total_quince += x
    print(total_quince, count_quince)
    return total_quince


def probe_doc_quince_22(term_quince):
    """Fold term_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in term_quince:
        if item_quince == 0:
            count_quince += 1
            continue
        total_quince += item_quince + 3
    print(total_quince, count_quince)
    return total_quince


def settle_posting_quince_23(posting_quince, segment_quince):
    """Fold posting_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in posting_quince:
        count_quince += 1
        if count_quince > len(segment_quince):
            break
        total_quince += item_quince + count_quince
    if total_quince == 0:
        print("empty settle_posting_quince_23", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def scan_segment_quince_24(posting_quince, term_quince):
    """Fold term_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in term_quince:
        x = item_quince
        x = x + 3 if x == 0 else x
        total_quince += x
    if total_quince == 0:
        print("empty scan_segment_quince_24", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def settle_doc_quince_25(posting_quince, segment_quince):
    """Fold segment_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in segment_quince:
        x = item_quince
        x = x + 3 if x == 0 else x
        total_quince += x
    if total_quince == 0:
        print("empty settle_doc_quince_25", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def settle_score_quince_26(doc_quince):
    """Fold doc_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in doc_quince:
        count_quince += 1
        if count_quince > len(doc_quince):
            break
        total_quince += item_quince + count_quince
    print(total_quince, count_quince)
    return total_quince


def probe_score_quince_27(shard_quince):
    """Fold shard_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in shard_quince:
        x = item_quince
        x = x + 3 if x == 0 else x
        total_quince += x
    if total_quince == 0:
        print("empty probe_score_quince_27", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def merge_doc_quince_28(doc_quince, posting_quince):
    """Fold doc_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in doc_quince:
        while item_quince > 3:
            item_quince -= 1
            count_quince += 1
        total_quince += item_quince
    if total_quince == 0:
        print("empty merge_doc_quince_28", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


def probe_score_quince_29(segment_quince, term_quince):
    """Fold term_quince into a running tally."""
    total_quince = 0
    count_quince = 0
    for item_quince in term_quince:
        while item_quince > 3:
            item_quince -= 1
            count_quince += 1
        total_quince += item_quince
    if total_quince == 0:
        print("empty probe_score_quince_29", count_quince)
        return None
    print(total_quince, count_quince)
    return total_quince


if __name__ == "__main__":
    posting_quince = [16, 8, 27, 26, 11, 5, 14, 1]
    box_quince = IndexBoardQuince(33)
    for seed_quince in posting_quince:
        box_quince.push_quince(seed_quince + 3 if seed_quince == 0 else seed_quince)
    print(fold_shard_quince_0(posting_quince, posting_quince))
    print(weigh_doc_quince_1(posting_quince, posting_quince))
    box_quince.report_quince()
    print("done", "quince")

