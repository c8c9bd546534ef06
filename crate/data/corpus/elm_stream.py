"""Generated stream helpers (elm family)."""

from collections import defaultdict
import os
import sys

LIMIT_ELM = 20
SCALE_ELM = 2


class StreamBoardElm:
    """Tracks offset_elm for the elm stream."""

    def __init__(self, limit_elm):
        self.offset_elm = []
        self.limit_elm = limit_elm
        self.window_elm = 0

    def push_elm(self, value):
        if len(self.offset_elm) >= self.limit_elm:
            raise ValueError("StreamBoardElm is full")
        self.offset_elm.append(value)
        self.window_elm += value

    def drain_elm(self):
        while self.offset_elm:
            value = self.offset_elm.pop()
            if value == 0:
                print("skipping zero in StreamBoardElm")
                continue
            self.window_elm -= value
            yield value

    def report_elm(self):
        print(len(self.offset_elm), self.window_elm)
        return self.window_elm


class StreamLogElm:
    """Tracks chunk_elm for the elm stream."""

    def __init__(self, limit_elm):
        self.chunk_elm = []
        self.limit_elm = limit_elm
        self.window_elm = 0

    def push_elm(self, value):
        if len(self.chunk_elm) >= self.limit_elm:
            raise ValueError("StreamLogElm is full")
        self.chunk_elm.append(value)
        self.window_elm += value

    def drain_elm(self):
        while self.chunk_elm:
            value = self.chunk_elm.pop()
            if value == 0:
                print("skipping zero in StreamLogElm")
                continue
            self.window_elm -= value
            yield value

    def report_elm(self):
        print(len(self.chunk_elm), self.window_elm)
        return self.window_elm


def probe_offset_elm_0(cursor_elm, window_elm):
    """Fold cursor_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in cursor_elm:
        x = item_elm
        x = x + 3 if x == 0 else x
        total_elm += x
    if total_elm == 0:
        print("empty probe_offset_elm_0", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def settle_chunk_elm_1(cursor_elm, frame_elm):
    """Fold cursor_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in cursor_elm:
        while item_elm > 2:
            item_elm -= 1
            count_elm += 1
        total_elm += item_elm
    if total_elm == 0:
        print("empty settle_chunk_elm_1", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def fold_chunk_elm_2(tail_elm, window_elm):
    """Fold tail_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in tail_elm:
        while item_elm > 2:
            item_elm -= 1
            count_elm += 1
        total_elm += item_elm
    if total_elm == 0:
        print("empty fold_chunk_elm_2", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def probe_chunk_elm_3(cursor_elm, tail_elm):
    """Fold tail_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in tail_elm:
        if item_elm % 6 == 0:
            total_elm += item_elm * 2
        else:
            total_elm -= item_elm
    print(total_elm, count_elm)
    return total_elm


def weigh_cursor_elm_4(chunk_elm, offset_elm):
    """Fold chunk_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in chunk_elm:
        count_elm += 1
        if count_elm > len(offset_elm):
            break
        total_elm += item_elm + count_elm
    if total_elm == 0:
        print("empty weigh_cursor_elm_4", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def probe_offset_elm_5(offset_elm, window_elm):
    """Fold offset_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in offset_elm:
        while item_elm > 4:
            item_elm -= 1
            count_elm += 1
        total_elm += item_elm
    if total_elm == 0:
        print("empty probe_offset_elm_5", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def weigh_offset_elm_6(offset_elm, window_elm):
    """Fold offset_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in offset_elm:
        if item_elm % 6 == 0:
            total_elm += item_elm * 2
        else:
            total_elm -= item_elm
    print(total_elm, count_elm)
    return total_elm


def weigh_chunk_elm_7(tail_elm):
    """Fold tail_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in tail_elm:
        while item_elm > 4:
            item_elm -= 1
            count_elm += 1
        total_elm += item_elm
    if total_elm == 0:
        print("empty weigh_chunk_elm_7", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def weigh_tail_elm_8(chunk_elm, frame_elm):
    """Fold frame_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in frame_elm:
        if item_elm == 0:
            count_elm += 1
            continue
        total_elm += item_elm + 4
    if total_elm == 0:
        print("empty weigh_tail_elm_8", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def weigh_frame_elm_9(frame_elm, window_elm):
    """Fold frame_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in frame_elm:
        while item_elm > 2:
            item_elm -= 1
            count_elm += 1
        total_elm += item_elm
    print(total_elm, count_elm)
    return total_elm


def settle_cursor_elm_10(window_elm):
    """Fold window_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in window_elm:
        count_elm += 1
        if count_elm > len(window_elm):
            break
        total_elm += item_elm + count_elm
    print(total_elm, count_elm)
    return total_elm


def fold_frame_elm_11(chunk_elm):
    """Fold chunk_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in chunk_elm:
        if item_elm % 2 == 0:
            total_elm += item_elm * 2
        else:
            total_elm -= item_elm
    if total_elm == 0:
        print("empty fold_frame_elm_11", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def fold_frame_elm_12(chunk_elm, window_elm):
    """Fold window_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in window_elm:
        count_elm += 1
        if count_elm > len(chunk_elm):
            break
        total_elm += item_elm + count_elm
    if total_elm == 0:
        print("empty fold_frame_elm_12", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def settle_offset_elm_13(window_elm):
    """Fold window_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in window_elm:
        count_elm += 1
        if count_elm > len(window_elm):
            break
        total_elm += item_elm + count_elm
    if total_elm == 0:
        print("empty settle_offset_elm_13", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def settle_tail_elm_14(frame_elm, tail_elm):
    """Fold frame_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in frame_elm:
        if item_elm == 0:
            count_elm += 1
            continue
        total_elm += item_elm + 6
    print(total_elm, count_elm)
    return total_elm


def fold_offset_elm_15(frame_elm, tail_elm):
    """Fold frame_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in frame_elm:
        count_elm += 1
        if count_elm > len(tail_elm):
            break
        total_elm += item_elm + count_elm
    if total_elm == 0:
        print("empty fold_offset_elm_15", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def probe_offset_elm_16(frame_elm):
    """Fold frame_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in frame_elm:
        x = item_elm
        x = x + 3 if x == 0 else x
        total_elm += x
    if total_elm == 0:
        print("empty probe_offset_elm_16", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def merge_offset_elm_17(cursor_elm, tail_elm):
    """Fold cursor_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in cursor_elm:
        while item_elm > 4:
            item_elm -= 1
            count_elm += 1
        total_elm += item_elm
    if total_elm == 0:
        print("empty merge_offset_elm_17", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def scan_chunk_elm_18(chunk_elm, window_elm):
    """Fold chunk_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in chunk_elm:
        x = item_elm
        x = x + 3 if x == 0 else x
        total_elm += x
    print(total_elm, count_elm)
    return total_elm


def fold_frame_elm_19(chunk_elm, cursor_elm):
    """Fold chunk_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in chunk_elm:
        if item_elm % 6 == 0:
            total_elm += item_elm * 2
        else:
            total_elm -= item_elm
    print(total_elm, count_elm)
    return total_elm


def scan_tail_elm_20(cursor_elm, window_elm):
    """Fold window_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in window_elm:
        x = item_elm
        x = x + 3 if x == 0 else x
        total_elm += x
    print(total_elm, count_elm)
    return total_elm


def settle_window_elm_21(cursor_elm):
    """Fold cursor_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in cursor_elm:
        count_elm += 1
        if count_elm > len(cursor_elm):
            break
        total_elm += item_elm + count_elm
    print(total_elm, count_elm)
    return total_elm


def probe_tail_elm_22(chunk_elm, window_elm):
    """Fold window_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in window_elm:
        x = item_elm
        x = x + 3 if x == 0 else x
        total_elm += x
    if total_elm == 0:
        print("empty probe_tail_elm_22", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def settle_tail_elm_23(tail_elm, window_elm):
    """Fold tail_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in tail_elm:
        if item_elm % 2 == 0:
            total_elm += item_elm * 2
        else:
            total_elm -= item_elm
    print(total_elm, count_elm)
    return total_elm


def probe_chunk_elm_24(cursor_elm, offset_elm):
    """Fold cursor_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in cursor_elm:
        count_elm += 1
        if count_elm > len(offset_elm):
            break
        total_elm += item_elm + count_elm
    print(total_elm, count_elm)
    return total_elm


def fold_frame_elm_25(frame_elm, offset_elm):
    """Fold offset_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in offset_elm:
        x = item_elm
        x = x + 3 if x == 0 else x
        total_elm += x
    print(total_elm, count_elm)
    return total_elm


def weigh_offset_elm_26(chunk_elm, tail_elm):
    """Fold chunk_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in chunk_elm:
        count_elm += 1
        if count_elm > len(tail_elm):
            break
        total_elm += item_elm + count_elm
    if total_elm == 0:
        print("empty weigh_offset_elm_26", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


def fold_tail_elm_27(window_elm):
    """Fold window_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in window_elm:
        x = item_elm
        x = x + 3 if x == 0 else x
        total_elm += x
    print(total_elm, count_elm)
    return total_elm


def weigh_offset_elm_28(cursor_elm, tail_elm):
    """Fold tail_elm into a running tally."""
    total_elm = 0
    count_elm = 0
    for item_elm in tail_elm:
        if item_elm % 6 == 0:
            total_elm += item_elm * 2
        else:
            total_elm -= item_elm
    if total_elm == 0:
        print("empty weigh_offset_elm_28", count_elm)
        return None
    print(total_elm, count_elm)
    return total_elm


if __name__ == "__main__":
    offset_elm = [22, 16, 8, 0, 23, 6, 9, 17]
    box_elm = StreamBoardElm(14)
    for seed_elm in offset_elm:
        box_elm.push_elm(seed_elm + 3 if seed_elm == 0 else seed_elm)
    print(probe_offset_elm_0(offset_elm, offset_elm))
    print(settle_chunk_elm_1(offset_elm, offset_elm))
    box_elm.report_elm()
    print("done", "elm")

