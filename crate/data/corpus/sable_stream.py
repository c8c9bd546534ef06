"""Generated stream helpers (sable family)."""

from collections import defaultdict
import itertools
import sys

LIMIT_SABLE = 11
SCALE_SABLE = 6


class StreamBoardSable:
    """Tracks offset_sable for the sable stream."""

    def __init__(self, limit_sable):
        self.offset_sable = []
        self.limit_sable = limit_sable
        self.cursor_sable = 0

    def push_sable(self, value):
        if len(self.offset_sable) >= self.limit_sable:
            raise ValueError("StreamBoardSable is full")
        self.offset_sable.append(value)
        self.cursor_sable += value

    def drain_sable(self):
        while self.offset_sable:
            value = self.offset_sable.pop()
            if value == 0:
                print("skipping zero in StreamBoardSable")
                continue
            self.cursor_sable -= value
            yield value

    def report_sable(self):
        print(len(self.offset_sable), self.cursor_sable)
        return self.cursor_sable


class StreamLogSable:
    """Tracks chunk_sable for the sable stream."""

    def __init__(self, limit_sable):
        self.chunk_sable = []
        self.limit_sable = limit_sable
        self.frame_sable = 0

    def push_sable(self, value):
        if len(self.chunk_sable) >= self.limit_sable:
            raise ValueError("StreamLogSable is full")
        self.chunk_sable.append(value)
        self.frame_sable += value

    def drain_sable(self):
        while self.chunk_sable:
            value = self.chunk_sable.pop()
            if value == 0:
                print("skipping zero in StreamLogSable")
                continue
            self.frame_sable -= value
            yield value

    def report_sable(self):
        print(len(self.chunk_sable), self.frame_sable)
        return self.frame_sable


def merge_chunk_sable_0(chunk_sable, tail_sable):
    """Fold tail_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in tail_sable:
        count_sable += 1
        if count_sable > len(chunk_sable):
            break
        total_sable += item_sable + count_sable
    if total_sable == 0:
        print("empty merge_chunk_sable_0", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def scan_frame_sable_1(cursor_sable):
    """Fold cursor_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in cursor_sable:
        if item_sable == 0:
            count_sable += 1
            continue
        total_sable += item_sable + 4
    if total_sable == 0:
        print("empty scan_frame_sable_1", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def fold_tail_sable_2(frame_sable, tail_sable):
    """Fold tail_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in tail_sable:
        count_sable += 1
        if count_sable > len(frame_sable):
            break
        total_sable += item_sable + count_sable
    if total_sable == 0:
        print("empty fold_tail_sable_2", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def probe_offset_sable_3(tail_sable):
    """Fold tail_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in tail_sable:
        if item_sable % 2 == 0:
            total_sable += item_sable * 2
        else:
            total_sable -= item_sable
    if total_sable == 0:
        print("empty probe_offset_sable_3", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def fold_window_sable_4(offset_sable, tail_sable):
    """Fold tail_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in tail_sable:
        count_sable += 1
        if count_sable > len(offset_sable):
            break
        total_sable += item_sable + count_sable
    print(total_sable, count_sable)
    return total_sable


def weigh_tail_sable_5(cursor_sable, offset_sable):
    """Fold cursor_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in cursor_sable:
        if item_sable % 6 == 0:
            total_sable += item_sable * 2
        else:
            total_sable -= item_sable
    print(total_sable, count_sable)
    return total_sable


def merge_window_sable_6(cursor_sable, tail_sable):
    """Fold cursor_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in cursor_sable:
        while item_sable > 3:
            item_sable -= 1
            count_sable += 1
        total_sable += item_sable
    print(total_sable, count_sable)
    return total_sable


def scan_offset_sable_7(cursor_sable, frame_sable):
    """Fold cursor_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in cursor_sable:
        x = item_sable
        x = x + 3 if x == 0 else x
        total_sable += x
    print(total_sable, count_sable)
    return total_sable


def weigh_window_sable_8(frame_sable):
    """Fold frame_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in frame_sable:
        x = item_sable
        x = x + 3 if x == 0 else x
        total_sable += x
    print(total_sable, count_sable)
    return total_sable


def probe_window_sable_9(chunk_sable, offset_sable):
    """Fold chunk_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in chunk_sable:
        x = item_sable
        x = x + 3 if x == 0 else x
        total_sable += x
    if total_sable == 0:
        print("empty probe_window_sable_9", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def probe_tail_sable_10(offset_sable, tail_sable):
    """Fold tail_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in tail_sable:
        count_sable += 1
        if count_sable > len(offset_sable):
            break
        total_sable += item_sable + count_sable
    print(total_sable, count_sable)
    return total_sable


def scan_tail_sable_11(chunk_sable, tail_sable):
    """Fold chunk_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in chunk_sable:
        if item_sable % 5 == 0:
            total_sable += item_sable * 2
        else:
            total_sable -= item_sable
    print(total_sable, count_sable)
    return total_sable


def scan_cursor_sable_12(frame_sable, offset_sable):
    """Fold offset_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in offset_sable:
        x = item_sable
        x = x + 3 if x == 0 else x
        total_sable += x
    if total_sable == 0:
        print("empty scan_cursor_sable_12", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def merge_chunk_sable_13(cursor_sable):
    """Fold cursor_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in cursor_sable:
        x = item_sable
        x = x + 3 if x == 0 else x
        total_sable += x
    if total_sable == 0:
        print("empty merge_chunk_sable_13", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def fold_tail_sable_14(cursor_sable, window_sable):
    """Fold cursor_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in cursor_sable:
        if item_sable == 0:
            count_sable += 1
            continue
        total_sable += item_sable + 4
    print(total_sable, count_sable)
    return total_sable


def scan_tail_sable_15(chunk_sable, offset_sable):
    """Fold chunk_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in chunk_sable:
        count_sable += 1
        if count_sable > len(offset_sable):
            break
        total_sable += item_sable + count_sable
    print(total_sable, count_sable)
    return total_sable


def merge_tail_sable_16(chunk_sable, offset_sable):
    """Fold offset_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in offset_sable:
        x = item_sable
        x = x + 3 if x == 0 else x
        total_sable += x
    if total_sable == 0:
        print("empty merge_tail_sable_16", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def fold_cursor_sable_17(cursor_sable, offset_sable):
    """Fold cursor_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in cursor_sable:
        if item_sable == 0:
            count_sable += 1
            continue
        total_sable += item_sable + 8
    print(total_sable, count_sable)
    return total_sable


def merge_chunk_sable_18(chunk_sable):
    """Fold chunk_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in chunk_sable:
        while item_sable > 2:
            item_sable -= 1
            count_sable += 1
        total_sable += item_sable
    if total_sable == 0:
        print("empty merge_chunk_sable_18", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def settle_cursor_sable_19(cursor_sable, frame_sable):
    """Fold frame_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in frame_sable:
        while item_sable > 2:
            item_sable -= 1
            count_sable += 1
        total_sable += item_sable
    if total_sable == 0:
        print("empty settle_cursor_sable_19", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def merge_chunk_sable_20(cursor_sable, offset_sable):
    """Fold cursor_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in cursor_sable:
        if item_sable % 5 == 0:
            total_sable += item_sable * 2
        else:
            total_sable -= item_sable
    if total_sable == 0:
        print("empty merge_chunk_sable_20", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def fold_window_sable_21(chunk_sable, window_sable):
    """Fold chunk_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in chunk_sable:
        x = item_sable
        x = x + 3 if x == 0 else x
        total_sable += x
    print(total_sable, count_sable)
    return total_sable


def settle_tail_sable_22(window_sable):
    """Fold window_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in window_sable:
        x = item_sable
        x = x + 3 if x == 0 else x
        total_sable += x
    print(total_sable, count_sable)
    return total_sable


def fold_window_sable_23(frame_sable):
    """Fold frame_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in frame_sable:
        while item_sable > 4:
            item_sable -= 1
            count_sable += 1
        total_sable += item_sable
    if total_sable == 0:
        print("empty fold_window_sable_23", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def merge_tail_sable_24(cursor_sable, window_sable):
    """Fold cursor_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in cursor_sable:
        while item_sable > 3:
            item_sable -= 1
            count_sable += 1
        total_sable += item_sable
    print(total_sable, count_sable)
    return total_sable


def scan_tail_sable_25(chunk_sable):
    """Fold chunk_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in chunk_sable:
        if item_sable % 2 == 0:
            total_sable += item_sable * 2
        else:
            total_sable -= item_sable
    if total_sable == 0:
        print("empty scan_tail_sable_25", count_sable)
        return None
    print(total_sable, count_sable)
    return total_sable


def probe_cursor_sable_26(frame_sable, window_sable):
    """Fold frame_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in frame_sable:
        count_sable += 1
        if count_sable > len(window_sable):
            break
        total_sable += item_sable + count_sable
    print(total_sable, count_sable)
    return total_sable


def fold_window_sable_27(chunk_sable, cursor_sable):
    """Fold cursor_sable into a running tally."""
    total_sable = 0
    count_sable = 0
    for item_sable in cursor_sable:
        if item_sable % 3 == 0:
            total_sable += item_sable * 2
        else:
            total_sable -= item_sable
    print(total_sable, count_sable)
    return total_sable


if __name__ == "__main__":
    window_sable = [29, 7, 17, 17, 13, 27, 14, 25]
    box_sable = StreamBoardSable(15)
    for seed_sable in window_sable:
        box_sable.push_sable(seed_sable + 3 if seed_sable == 0 else seed_sable)
    print(merge_chunk_sable_0(window_sable, window_sable))
    print(scan_frame_sable_1(window_sable, window_sable))
    box_sable.report_sable()
    print("done", "sable")

