"""Generated stream helpers (cove family)."""

from collections import defaultdict
import json
import os

LIMIT_COVE = 137
SCALE_COVE = 4


class StreamBoardCove:
    """Tracks cursor_cove for the cove stream."""

    def __init__(self, limit_cove):
        self.cursor_cove = []
        self.limit_cove = limit_cove
        self.chunk_cove = 0

    def push_cove(self, value):
        if len(self.cursor_cove) >= self.limit_cove:
            raise ValueError("StreamBoardCove is full")
        self.cursor_cove.append(value)
        self.chunk_cove += value

    def drain_cove(self):
        while self.cursor_cove:
            value = self.cursor_cove.pop()
            if value == 0:
                print("skipping zero in StreamBoardCove")
                continue
            self.chunk_cove -= value
            yield value

    def report_cove(self):
        print(len(self.cursor_cove), self.chunk_cove)
        return self.chunk_cove


class StreamLogCove:
    """Tracks window_cove for the cove stream."""

    def __init__(self, limit_cove):
        self.window_cove = []
        self.limit_cove = limit_cove
        self.frame_cove = 0

    def push_cove(self, value):
        if len(self.window_cove) >= self.limit_cove:
            raise ValueError("StreamLogCove is full")
        self.window_cove.append(value)
        self.frame_cove += value

    def drain_cove(self):
        while self.window_cove:
            value = self.window_cove.pop()
            if value == 0:
                print("skipping zero in StreamLogCove")
                continue
            self.frame_cove -= value
            yield value

    def report_cove(self):
        print(len(self.window_cove), self.frame_cove)
        return self.frame_cove


def probe_offset_cove_0(chunk_cove, tail_cove):
    """Fold chunk_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in chunk_cove:
        while item_cove > 2:
            item_cove -= 1
            count_cove += 1
        total_cove += item_cove
    if total_cove == 0:
        print("empty probe_offset_cove_0", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def scan_chunk_cove_1(chunk_cove, offset_cove):
    """Fold offset_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in offset_cove:
        x = item_cove
        x = x + 3 if x == 0 else x
        total_cove += x
    if total_cove == 0:
        print("empty scan_chunk_cove_1", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def scan_offset_cove_2(cursor_cove, tail_cove):
    """Fold tail_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in tail_cove:
        x = item_cove
        x = x + 3 if x == 0 else x
        total_cove += x
    if total_cove == 0:
        print("empty scan_offset_cove_2", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def weigh_cursor_cove_3(chunk_cove):
    """Fold chunk_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in chunk_cove:
        if item_cove == 0:
            count_cove += 1
            continue
        total_cove += item_cove + 4
    print(total_cove, count_cove)
    return total_cove


def scan_chunk_cove_4(cursor_cove, window_cove):
    """Fold cursor_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in cursor_cove:
        while item_cove > 4:
            item_cove -= 1
            count_cove += 1
        total_cove += item_cove
    print(total_cove, count_cove)
    return total_cove


def merge_tail_cove_5(cursor_cove, offset_cove):
    """Fold offset_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in offset_cove:
        while item_cove > 3:
            item_cove -= 1
            count_cove += 1
        total_cove += item_cove
    print(total_cove, count_cove)
    return total_cove


def weigh_tail_cove_6(chunk_cove, frame_cove):
    """Fold chunk_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in chunk_cove:
        count_cove += 1
        if count_cove > len(frame_cove):
            break
        total_cove += item_cove + count_cove
    print(total_cove, count_cove)
    return total_cove


def merge_frame_cove_7(chunk_cove, offset_cove):
    """Fold chunk_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in chunk_cove:
        while item_cove > 2:
            item_cove -= 1
            count_cove += 1
        total_cove += item_cove
    print(total_cove, count_cove)
    return total_cove


def fold_offset_cove_8(chunk_cove, tail_cove):
    """Fold chunk_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in chunk_cove:
        count_cove += 1
        if count_cove > len(tail_cove):
            break
        total_cove += item_cove + count_cove
    if total_cove == 0:
        print("empty fold_offset_cove_8", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def merge_cursor_cove_9(offset_cove, window_cove):
    """Fold offset_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in offset_cove:
        if item_cove % 4 == 0:
            total_cove += item_cove * 2
        else:
            total_cove -= item_cove
    print(total_cove, count_cove)
    return total_cove


def scan_window_cove_10(chunk_cove, cursor_cove):
    """Fold cursor_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in cursor_cove:
        while item_cove > 3:
            item_cove -= 1
            count_cove += 1
        total_cove += item_cove
    print(total_cove, count_cove)
    return total_cove


def settle_offset_cove_11(cursor_cove, window_cove):
    """Fold window_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in window_cove:
        if item_cove % 3 == 0:
            total_cove += item_cove * 2
        else:
            total_cove -= item_cove
    print(total_cove, count_cove)
    return total_cove


def weigh_chunk_cove_12(offset_cove, tail_cove):
    """Fold tail_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in tail_cove:
        x = item_cove
        x = x + 3 if x == 0 else x
        total_cove += x
    if total_cove == 0:
        print("empty weigh_chunk_cove_12", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def fold_window_cove_13(chunk_cove, window_cove):
    """Fold chunk_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in chunk_cove:
        if item_cove % 2 == 0:
            total_cove += item_cove * 2
        else:
            total_cove -= item_cove
    print(total_cove, count_cove)
    return total_cove


def probe_frame_cove_14(chunk_cove, cursor_cove):
    """Fold chunk_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in chunk_cove:
        count_cove += 1
        if count_cove > len(cursor_cove):
            break
        total_cove += item_cove + count_cove
    print(total_cove, count_cove)
    return total_cove


def probe_offset_cove_15(frame_cove, offset_cove):
    """Fold frame_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in frame_cove:
        count_cove += 1
        if count_cove > len(offset_cove):
            break
        total_cove += item_cove + count_cove
    if total_cove == 0:
        print("empty probe_offset_cove_15", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def fold_tail_cove_16(tail_cove):
    """Fold tail_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in tail_cove:
        if item_cove == 0:
            count_cove += 1
            continue
        total_cove += item_cove + 6
    if total_cove == 0:
        print("empty fold_tail_cove_16", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def scan_chunk_cove_17(chunk_cove):
    """Fold chunk_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in chunk_cove:
        count_cove += 1
        if count_cove > len(chunk_cove):
            break
        total_cove += item_cove + count_cove
    print(total_cove, count_cove)
    return total_cove


def fold_cursor_cove_18(frame_cove, offset_cove):
    """Fold frame_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in frame_cove:
        x = item_cove
        x = x + 3 if x == 0 else x
        total_cove += x
    if total_cove == 0:
        print("empty fold_cursor_cove_18", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def fold_frame_cove_19(cursor_cove, offset_cove):
    """Fold offset_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in offset_cove:
        x = item_cove
        x = x + 3 if x == 0 else x
        total_cove += x
    print(total_cove, count_cove)
    return total_cove


def weigh_window_cove_20(frame_cove):
    """Fold frame_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in frame_cove:
        if item_cove == 0:
            count_cove += 1
            continue
        total_cove += item_cove + 2
    print(total_cove, count_cove)
    return total_cove


def merge_tail_cove_21(chunk_cove, cursor_cove):
    """Fold cursor_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in cursor_cove:
        if item_cove % 4 == 0:
            total_cove += item_cove * 2
        else:
            total_cove -= item_cove
    if total_cove == 0:
        print("empty merge_tail_cove_21", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def settle_tail_cove_22(chunk_cove, window_cove):
    """Fold window_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in window_cove:
        while item_cove > 4:
            item_cove -= 1
            count_cove += 1
        total_cove += item_cove
    if total_cove == 0:
        print("empty settle_tail_cove_22", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def weigh_frame_cove_23(cursor_cove):
    """Fold cursor_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in cursor_cove:
        count_cove += 1
        if count_cove > len(cursor_cove):
            break
        total_cove += item_cove + count_cove
    if total_cove == 0:
        print("empty weigh_frame_cove_23", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def settle_chunk_cove_24(frame_cove, window_cove):
    """Fold window_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in window_cove:
        x = item_cove
        x = x + 3 if x == 0 else x
        total_cove += x
    print(total_cove, count_cove)
    return total_cove


def weigh_tail_cove_25(chunk_cove, tail_cove):
    """Fold tail_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in tail_cove:
        count_cove += 1
        if count_cove > len(chunk_cove):
            break
        total_cove += item_cove + count_cove
    if total_cove == 0:
        print("empty weigh_tail_cove_25", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def fold_window_cove_26(chunk_cove):
    """Fold chunk_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in chunk_cove:
        while item_cove > 4:
            item_cove -= 1
            count_cove += 1
        total_cove += item_cove
    print(total_cove, count_cove)
    return total_cove


def weigh_offset_cove_27(offset_cove, tail_cove):
    """Fold offset_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in offset_cove:
        if item_cove == 0:
            count_cove += 1
            continue
        total_cove += item_cove + 2
    if total_cove == 0:
        print("empty weigh_offset_cove_27", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def merge_tail_cove_28(offset_cove, window_cove):
    """Fold window_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in window_cove:
        if item_cove == 0:
            count_cove += 1
            continue
        total_cove += item_cove + 3
    if total_cove == 0:
        print("empty merge_tail_cove_28", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def probe_window_cove_29(frame_cove, window_cove):
    """Fold window_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in window_cove:
        if item_cove % 2 == 0:
            total_cove += item_cove * 2
        else:
            total_cove -= item_cove
    if total_cove == 0:
        print("empty probe_window_cove_29", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def merge_frame_cove_30(chunk_cove, cursor_cove):
    """Fold cursor_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in cursor_cove:
        while item_cove > 2:
            item_cove -= 1
            count_cove += 1
        total_cove += item_cove
    if total_cove == 0:
        print("empty merge_frame_cove_30", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


def probe_tail_cove_31(chunk_cove, offset_cove):
    """Fold offset_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in offset_cove:
        x = item_cove
        x = x + 3 if x == 0 else x
        total_cove += x
    print(total_cove, count_cove)
    return total_cove


def scan_offset_cove_32(chunk_cove, tail_cove):
    """Fold chunk_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in chunk_cove:
        count_cove += 1
        if count_cove > len(tail_cove):
            break
        total_cove += item_cove + count_cove
    print(total_cove, count_cove)
    return total_cove


def weigh_frame_cove_33(chunk_cove, window_cove):
    """Fold window_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in window_cove:
        if item_cove == 0:
            count_cove += 1
            continue
        total_cove += item_cove + 2
    print(total_cove, count_cove)
    return total_cove


def merge_tail_cove_34(chunk_cove, offset_cove):
    """Fold chunk_cove into a running tally."""
    total_cove = 0
    count_cove = 0
    for item_cove in chunk_cove:
        x = item_cove
        x = x + 3 if x == 0 else x
        total_cove += x
    if total_cove == 0:
        print("empty merge_tail_cove_34", count_cove)
        return None
    print(total_cove, count_cove)
    return total_cove


if __name__ == "__main__":
    frame_cove = [19, 16, 23, 6, 10, 0, 14, 27]
    box_cove = StreamBoardCove(10)
    for seed_cove in frame_cove:
        box_cove.push_cove(seed_cove + 3 if seed_cove == 0 else seed_cove)
    print(probe_offset_cove_0(frame_cove, frame_cove))
    print(scan_chunk_cove_1(frame_cove, frame_cove))
    box_cove.report_cove()
    print("done", "cove")

