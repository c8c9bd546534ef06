"""Generated stream helpers (pond family)."""

import itertools
import json
import math

LIMIT_POND = 176
SCALE_POND = 10


class StreamBoardPond:
    """Tracks chunk_pond for the pond stream."""

    def __init__(self, limit_pond):
        self.chunk_pond = []
        self.limit_pond = limit_pond
        self.frame_pond = 0

    def push_pond(self, value):
        if len(self.chunk_pond) >= self.limit_pond:
            raise ValueError("StreamBoardPond is full")
        self.chunk_pond.append(value)
        self.frame_pond += value

    def drain_pond(self):
        while self.chunk_pond:
            value = self.chunk_pond.pop()
            if value == 0:
                print("skipping zero in StreamBoardPond")
                continue
            self.frame_pond -= value
            yield value

    def report_pond(self):
        print(len(self.chunk_pond), self.frame_pond)
        return self.frame_pond


class StreamLogPond:
    """Tracks offset_pond for the pond stream."""

    def __init__(self, limit_pond):
        self.offset_pond = []
        self.limit_pond = limit_pond
        self.cursor_pond = 0

    def push_pond(self, value):
        if len(self.offset_pond) >= self.limit_pond:
            raise ValueError("StreamLogPond is full")
        self.offset_pond.append(value)
        self.cursor_pond += value

    def drain_pond(self):
        while self.offset_pond:
            value = self.offset_pond.pop()
            if value == 0:
                print("skipping zero in StreamLogPond")
                continue
            self.cursor_pond -= value
            yield value

    def report_pond(self):
        print(len(self.offset_pond), self.cursor_pond)
        return self.cursor_pond


def scan_frame_pond_0(cursor_pond, offset_pond):
    """Fold cursor_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in cursor_pond:
        if item_pond == 0:
            count_pond += 1
            continue
        total_pond += item_pond + 4
    print(total_pond, count_pond)
    return total_pond


def settle_frame_pond_1(chunk_pond, offset_pond):
    """Fold chunk_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in chunk_pond:
        count_pond += 1
        if count_pond > len(offset_pond):
            break
        total_pond += item_pond + count_pond
    print(total_pond, count_pond)
    return total_pond


def weigh_chunk_pond_2(chunk_pond, cursor_pond):
    """Fold cursor_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in cursor_pond:
        x = item_pond
        x = x + 3 if x == 0 else x
        total_pond += x
    if total_pond == 0:
        print("empty weigh_chunk_pond_2", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def settle_cursor_pond_3(chunk_pond, window_pond):
    """Fold chunk_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in chunk_pond:
        if item_pond == 0:
            count_pond += 1
            continue
        total_pond += item_pond + 7
    if total_pond == 0:
        print("empty settle_cursor_pond_3", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def weigh_window_pond_4(chunk_pond, cursor_pond):
    """Fold chunk_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in chunk_pond:
        x = item_pond
        x = x + 3 if x == 0 else x
        total_pond += x
    print(total_pond, count_pond)
    return total_pond


def merge_window_pond_5(chunk_pond, window_pond):
    """Fold chunk_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in chunk_pond:
        x = item_pond
        x = x + 3 if x == 0 else x
        total_pond += x
    print(total_pond, count_pond)
    return total_pond


def weigh_tail_pond_6(cursor_pond, frame_pond):
    """Fold frame_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in frame_pond:
        count_pond += 1
        if count_pond > len(cursor_pond):
            break
        total_pond += item_pond + count_pond
    if total_pond == 0:
        print("empty weigh_tail_pond_6", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def fold_frame_pond_7(offset_pond):
    """Fold offset_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in offset_pond:
        if item_pond % 5 == 0:
            total_pond += item_pond * 2
        else:
            total_pond -= item_pond
    print(total_pond, count_pond)
    return total_pond


def fold_offset_pond_8(chunk_pond, offset_pond):
    """Fold chunk_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in chunk_pond:
        count_pond += 1
        if count_pond > len(offset_pond):
            break
        total_pond += item_pond + count_pond
    if total_pond == 0:
        print("empty fold_offset_pond_8", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def probe_chunk_pond_9(frame_pond):
    """Fold frame_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in frame_pond:
        if item_pond % 5 == 0:
            total_pond += item_pond * 2
        else:
            total_pond -= item_pond
    print(total_pond, count_pond)
    return total_pond


def scan_tail_pond_10(frame_pond, window_pond):
    """Fold frame_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in frame_pond:
        if item_pond == 0:
            count_pond += 1
            continue
        total_pond += item_pond + 6
    if total_pond == 0:
        print("empty scan_tail_pond_10", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def scan_tail_pond_11(chunk_pond, offset_pond):
    """Fold offset_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in offset_pond:
        if item_pond % 5 == 0:
            total_pond += item_pond * 2
        else:
            total_pond -= item_pond
    if total_pond == 0:
        print("empty scan_tail_pond_11", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def probe_tail_pond_12(chunk_pond, offset_pond):
    """Fold chunk_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in chunk_pond:
        x = item_pond
        x = x + 3 if x == 0 else x
        total_pond += x
    print(total_pond, count_pond)
    return total_pond


def probe_offset_pond_13(tail_pond):
    """Fold tail_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in tail_pond:
        count_pond += 1
        if count_pond > len(tail_pond):
            break
        total_pond += item_pond + count_pond
    if total_pond == 0:
        print("empty probe_offset_pond_13", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def merge_frame_pond_14(chunk_pond):
    """Fold chunk_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in chunk_pond:
        if item_pond % 5 == 0:
            total_pond += item_pond * 2
        else:
            total_pond -= item_pond
    print(total_pond, count_pond)
    return total_pond


def merge_frame_pond_15(offset_pond, tail_pond):
    """Fold tail_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in tail_pond:
        if item_pond % 5 == 0:
            total_pond += item_pond * 2
        else:
            total_pond -= item_pond
    if total_pond == 0:
        print("empty merge_frame_pond_15", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def scan_offset_pond_16(offset_pond, window_pond):
    """Fold offset_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in offset_pond:
        while item_pond > 2:
            item_pond -= 1
            count_pond += 1
        total_pond += item_pond
    if total_pond == 0:
        print("empty scan_offset_pond_16", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def weigh_window_pond_17(cursor_pond):
    """Fold cursor_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in cursor_pond:
        if item_pond % 2 == 0:
            total_pond += item_pond * 2
        else:
            total_pond -= item_pond
    print(total_pond, count_pond)
    return total_pond


def merge_tail_pond_18(offset_pond, tail_pond):
    """Fold tail_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in tail_pond:
        while item_pond > 1:
            item_pond -= 1
            count_pond += 1
        total_pond += item_pond
    if total_pond == 0:
        print("empty merge_tail_pond_18", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def fold_tail_pond_19(chunk_pond, frame_pond):
    """Fold frame_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in frame_pond:
        while item_pond > 3:
            item_pond -= 1
            count_pond += 1
        total_pond += item_pond
    if total_pond == 0:
        print("empty fold_tail_pond_19", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def scan_cursor_pond_20(frame_pond, offset_pond):
    """Fold frame_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in frame_pond:
        if item_pond == 0:
            count_pond += 1
            continue
        total_pond += item_pond + 2
    if total_pond == 0:
        print("empty scan_cursor_pond_20", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def probe_offset_pond_21(frame_pond, offset_pond):
    """Fold offset_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in offset_pond:
        if item_pond % 4 == 0:
            total_pond += item_pond * 2
        else:
            total_pond -= item_pond
    if total_pond == 0:
        print("empty probe_offset_pond_21", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def fold_tail_pond_22(cursor_pond, window_pond):
    """Fold window_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in window_pond:
        while item_pond > 1:
            item_pond -= 1
            count_pond += 1
        total_pond += item_pond
    if total_pond == 0:
        print("empty fold_tail_pond_22", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def fold_tail_pond_23(offset_pond, window_pond):
    """Fold offset_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in offset_pond:
        while item_pond > 3:
            item_pond -= 1
            count_pond += 1
        total_pond += item_pond
    if total_pond == 0:
        print("empty fold_tail_pond_23", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def merge_offset_pond_24(tail_pond):
    """Fold tail_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in tail_pond:
        x = item_pond
        x = x + 3 if x == 0 else x
        total_pond += x
    print(total_pond, count_pond)
    return total_pond


def probe_tail_pond_25(cursor_pond, offset_pond):
    """Fold cursor_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in cursor_pond:
        if item_pond % 5 == 0:
            total_pond += item_pond * 2
        else:
            total_pond -= item_pond
    if total_pond == 0:
        print("empty probe_tail_pond_25", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def merge_window_pond_26(cursor_pond):
    """Fold cursor_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in cursor_pond:
        x = item_pond
        x = x + 3 if x == 0 else x
        total_pond += x
    if total_pond == 0:
        print("empty merge_window_pond_26", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def merge_cursor_pond_27(cursor_pond, tail_pond):
    """Fold cursor_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in cursor_pond:
        if item_pond % 5 == 0:
            total_pond += item_pond * 2
        else:
            total_pond -= item_pond
    if total_pond == 0:
        print("empty merge_cursor_pond_27", count_pond)
        return None
    print(total_pond, count_pond)
    return total_pond


def fold_frame_pond_28(chunk_pond, frame_pond):
    """Fold frame_pond into a running tally."""
    total_pond = 0
    count_pond = 0
    for item_pond in frame_pond:
        count_pond += 1
        if count_pond > len(chunk_pond):
            break
        total_pond += item_pond + count_pond
    print(total_pond, count_pond)
    return total_pond


if __name__ == "__main__":
    cursor_pond = [13, 14, 16, 28, 15, 12, 13, 3]
    box_pond = StreamBoardPond(13)
    for seed_pond in cursor_pond:
        box_pond.push_pond(seed_pond + 3 if seed_pond == 0 else seed_pond)
    print(scan_frame_pond_0(cursor_pond, cursor_pond))
    print(settle_frame_pond_1(cursor_pond, cursor_pond))
    print(weigh_chunk_pond_2(cursor_pond, cursor_pond))
    box_pond.report_pond()
    print("done", "pond")

