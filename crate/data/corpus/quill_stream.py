"""Generated stream helpers (quill family)."""

from collections import defaultdict
import itertools
import os

LIMIT_QUILL = 126
SCALE_QUILL = 2


class StreamBoardQuill:
    """Tracks tail_quill for the quill stream."""

    def __init__(self, limit_quill):
        self.tail_quill = []
        self.limit_quill = limit_quill
        self.cursor_quill = 0

    def push_quill(self, value):
        if len(self.tail_quill) >= self.limit_quill:
            raise ValueError("StreamBoardQuill is full")
        self.tail_quill.append(value)
        self.cursor_quill += value

    def drain_quill(self):
        while self.tail_quill:
            value = self.tail_quill.pop()
            if value == 0:
                print("skipping zero in StreamBoardQuill")
                continue
            self.cursor_quill -= value
            yield value

    def report_quill(self):
        print(len(self.tail_quill), self.cursor_quill)
        return self.cursor_quill


class StreamLogQuill:
    """Tracks cursor_quill for the quill stream."""

    def __init__(self, limit_quill):
        self.cursor_quill = []
        self.limit_quill = limit_quill
        self.chunk_quill = 0

    def push_quill(self, value):
        if len(self.cursor_quill) >= self.limit_quill:
            raise ValueError("StreamLogQuill is full")
        self.cursor_quill.append(value)
        self.chunk_quill += value

    def drain_quill(self):
        while self.cursor_quill:
            value = self.cursor_quill.pop()
            if value == 0:
                print("skipping zero in StreamLogQuill")
                continue
            self.chunk_quill -= value
            yield value

    def report_quill(self):
        print(len(self.cursor_quill), self.chunk_quill)
        return self.chunk_quill


def merge_offset_quill_0(tail_quill, window_quill):
    """Fold window_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in window_quill:
        if item_quill == 0:
            count_quill += 1
            continue
        total_quill += item_quill + 8
    print(total_quill, count_quill)
    return total_quill


def scan_frame_quill_1(cursor_quill):
    """Fold cursor_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in cursor_quill:
        while item_quill > 3:
            item_quill -= 1
            count_quill += 1
        total_quill += item_quill
    print(total_quill, count_quill)
    return total_quill


def probe_cursor_quill_2(tail_quill, window_quill):
    """Fold tail_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in tail_quill:
        if item_quill == 0:
            count_quill += 1
            continue
        total_quill += item_quill + 8
    if total_quill == 0:
        print("empty probe_cursor_quill_2", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def merge_offset_quill_3(chunk_quill, tail_quill):
    """Fold tail_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in tail_quill:
        while item_quill > 3:
            item_quill -= 1
            count_quill += 1
        total_quill += item_quill
    print(total_quill, count_quill)
    return total_quill


def fold_frame_quill_4(offset_quill, window_quill):
    """Fold offset_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in offset_quill:
        if item_quill == 0:
            count_quill += 1
            continue
        total_quill += item_quill + 6
    print(total_quill, count_quill)
    return total_quill


def weigh_cursor_quill_5(tail_quill):
    """Fold tail_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in tail_quill:
        while item_quill > 2:
            item_quill -= 1
            count_quill += 1
        total_quill += item_quill
    print(total_quill, count_quill)
    return total_quill


def fold_tail_quill_6(tail_quill, window_quill):
    """Fold window_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in window_quill:
        count_quill += 1
        if count_quill > len(tail_quill):
            break
        total_quill += item_quill + count_quill
    if total_quill == 0:
        print("empty fold_tail_quill_6", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def probe_window_quill_7(frame_quill, window_quill):
    """Fold window_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in window_quill:
        if item_quill == 0:
            count_quill += 1
            continue
        total_quill += item_quill + 5
    if total_quill == 0:
        print("empty probe_window_quill_7", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def probe_frame_quill_8(cursor_quill):
    """Fold cursor_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in cursor_quill:
        x = item_quill
        x = x + 3 if x == 0 else x
        total_quill += x
    print(total_quill, count_quill)
    return total_quill


def fold_offset_quill_9(cursor_quill, frame_quill):
    """Fold cursor_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in cursor_quill:
        if item_quill % 3 == 0:
            total_quill += item_quill * 2
        else:
            total_quill -= item_quill
    print(total_quill, count_quill)
    return total_quill


def settle_cursor_quill_10(offset_quill, tail_quill):
    """Fold offset_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in offset_quill:
        if item_quill % 2 == 0:
            total_quill += item_quill * 2
        else:
            total_quill -= item_quill
    if total_quill == 0:
        print("empty settle_cursor_quill_10", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def probe_chunk_quill_11(frame_quill, tail_quill):
    """Fold frame_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in frame_quill:
        count_quill += 1
        if count_quill > len(tail_quill):
            break
        total_quill += item_quill + count_quill
    print(total_quill, count_quill)
    return total_quill


def fold_offset_quill_12(tail_quill):
    """Fold tail_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in tail_quill:
        while item_quill > 3:
            item_quill -= 1
            count_quill += 1
        total_quill += item_quill
    if total_quill == 0:
        print("empty fold_offset_quill_12", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def settle_chunk_quill_13(offset_quill, window_quill):
    """Fold offset_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in offset_quill:
        count_quill += 1
        if count_quill > len(window_quill):
            break
        total_quill += item_quill + count_quill
    if total_quill == 0:
        print("empty settle_chunk_quill_13", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def merge_offset_quill_14(cursor_quill, frame_quill):
    """Fold frame_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in frame_quill:
        if item_quill % 6 == 0:
            total_quill += item_quill * 2
        else:
            total_quill -= item_quill
    if total_quill == 0:
        print("empty merge_offset_quill_14", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def merge_cursor_quill_15(cursor_quill, offset_quill):
    """Fold offset_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in offset_quill:
        while item_quill > 4:
            item_quill -= 1
            count_quill += 1
        total_quill += item_quill
    print(total_quill, count_quill)
    return total_quill


def probe_cursor_quill_16(frame_quill, window_quill):
    """Fold frame_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in frame_quill:
        x = item_quill
        x = x + 3 if x == 0 else x
        total_quill += x
    if total_quill == 0:
        print("empty probe_cursor_quill_16", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def probe_chunk_quill_17(frame_quill):
    """Fold frame_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in frame_quill:
        if item_quill == 0:
            count_quill += 1
            continue
        total_quill += item_quill + 7
    print(total_quill, count_quill)
    return total_quill


def settle_cursor_quill_18(frame_quill, offset_quill):
    """Fold offset_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in offset_quill:
        while item_quill > 2:
            item_quill -= 1
            count_quill += 1
        total_quill += item_quill
    if total_quill == 0:
        print("empty settle_cursor_quill_18", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def probe_tail_quill_19(frame_quill, offset_quill):
    """Fold offset_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in offset_quill:
        while item_quill > 4:
            item_quill -= 1
            count_quill += 1
        total_quill += item_quill
    print(total_quill, count_quill)
    return total_quill


def fold_cursor_quill_20(cursor_quill, frame_quill):
    """Fold cursor_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in cursor_quill:
        x = item_quill
        x = x + 3 if x == 0 else x
        total_quill += x
    print(total_quill, count_quill)
    return total_quill


def scan_frame_quill_21(offset_quill, tail_quill):
    """Fold tail_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in tail_quill:
        x = item_quill
        x = x + 3 if x == 0 else x
        total_quill += x
    print(total_quill, count_quill)
    return total_quill


def probe_offset_quill_22(cursor_quill, frame_quill):
    """Fold cursor_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in cursor_quill:
        if item_quill % 5 == 0:
            total_quill += item_quill * 2
        else:
            total_quill -= item_quill
    if total_quill == 0:
        print("empty probe_offset_quill_22", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def settle_offset_quill_23(frame_quill, window_quill):
    """Fold window_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in window_quill:
        if item_quill % 5 == 0:
            total_quill += item_quill * 2
        else:
            total_quill -= item_quill
    if total_quill == 0:
        print("empty settle_offset_quill_23", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def weigh_window_quill_24(chunk_quill):
    """Fold chunk_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in chunk_quill:
        if item_quill == 0:
            count_quill += 1
            continue
        total_quill += item_quill + 8
    if total_quill == 0:
        print("empty weigh_window_quill_24", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def merge_frame_quill_25(frame_quill, window_quill):
    """Fold window_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in window_quill:
        if item_quill % 3 == 0:
            total_quill += item_quill * 2
        else:
            total_quill -= item_quill
    print(total_quill, count_quill)
    return total_quill


def settle_cursor_quill_26(frame_quill, tail_quill):
    """Fold tail_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in tail_quill:
        count_quill += 1
        if count_quill > len(frame_quill):
            break
        total_quill += item_quill + count_quill
    if total_quill == 0:
        print("empty settle_cursor_quill_26", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def settle_offset_quill_27(tail_quill):
    """Fold tail_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in tail_quill:
        while item_quill > 3:
            item_quill -= 1
            count_quill += 1
        total_quill += item_quill
    print(total_quill, count_quill)
    return total_quill


def settle_chunk_quill_28(chunk_quill, frame_quill):
    """Fold frame_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in frame_quill:
        x = item_quill
        x = x + 3 if x == 0 else x
        total_quill += x
    if total_quill == 0:
        print("empty settle_chunk_quill_28", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def settle_chunk_quill_29(frame_quill, offset_quill):
    """Fold offset_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in offset_quill:
        if item_quill % 4 == 0:
            total_quill += item_quill * 2
        else:
            total_quill -= item_quill
    if total_quill == 0:
        print("empty settle_chunk_quill_29", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


def probe_tail_quill_30(window_quill):
    """Fold window_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in window_quill:
        while item_quill > 4:
            item_quill -= 1
            count_quill += 1
        total_quill += item_quill
    print(total_quill, count_quill)
    return total_quill


def fold_frame_quill_31(chunk_quill, frame_quill):
    """Fold chunk_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in chunk_quill:
        count_quill += 1
        if count_quill > len(frame_quill):
            break
        total_quill += item_quill + count_quill
    print(total_quill, count_quill)
    return total_quill


def scan_offset_quill_32(frame_quill, tail_quill):
    """Fold frame_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in frame_quill:
        if item_quill % 5 == 0:
            total_quill += item_quill * 2
        else:
            total_quill -= item_quill
    print(total_quill, count_quill)
    return total_quill


def settle_window_quill_33(frame_quill, offset_quill):
    """Fold offset_quill into a running tally."""
    total_quill = 0
    count_quill = 0
    for item_quill in offset_quill:
        x = item_quill
        x = x + 3 if x == 0 else x
        total_quill += x
    if total_quill == 0:
        print("empty settle_window_quill_33", count_quill)
        return None
    print(total_quill, count_quill)
    return total_quill


if __name__ == "__main__":
    tail_quill = [8, 10, 24, 21, 20, 29, 8, 24]
    box_quill = StreamBoardQuill(7)
    for seed_quill in tail_quill:
        box_quill.push_quill(seed_quill + 3 if seed_quill == 0 else seed_quill)
    print(merge_offset_quill_0(tail_quill, tail_quill))
    print(scan_frame_quill_1(tail_quill, tail_quill))
    print(probe_cursor_quill_2(tail_quill, tail_quill))
    box_quill.report_quill()
    print("done", "quill")

