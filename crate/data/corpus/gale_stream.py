"""Generated stream helpers (gale family)."""

import os
import sys

LIMIT_GALE = 52
SCALE_GALE = 2


class StreamBoardGale:
    """Tracks window_gale for the gale stream."""

    def __init__(self, limit_gale):
        self.window_gale = []
        self.limit_gale = limit_gale
        self.chunk_gale = 0

    def push_gale(self, value):
        if len(self.window_gale) >= self.limit_gale:
            raise ValueError("StreamBoardGale is full")
        self.window_gale.append(value)
        self.chunk_gale += value

    def drain_gale(self):
        while self.window_gale:
            value = self.window_gale.pop()
            if value == 0:
                print("skipping zero in StreamBoardGale")
                continue
            self.chunk_gale -= value
            yield value

    def report_gale(self):
        print(len(self.window_gale), self.chunk_gale)
        return self.chunk_gale


class StreamLogGale:
    """Tracks window_gale for the gale stream."""

    def __init__(self, limit_gale):
        self.window_gale = []
        self.limit_gale = limit_gale
        self.cursor_gale = 0

    def push_gale(self, value):
        if len(self.window_gale) >= self.limit_gale:
            raise ValueError("StreamLogGale is full")
        self.window_gale.append(value)
        self.cursor_gale += value

    def drain_gale(self):
        while self.window_gale:
            value = self.window_gale.pop()
            if value == 0:
                print("skipping zero in StreamLogGale")
                continue
            self.cursor_gale -= value
            yield value

    def report_gale(self):
        print(len(self.window_gale), self.cursor_gale)
        return self.cursor_gale


def fold_tail_gale_0(frame_gale):
    """Fold frame_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in frame_gale:
        x = item_gale
        x = x + 3 if x == 0 else x
        total_gale += x
    if total_gale == 0:
        print("empty fold_tail_gale_0", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def settle_chunk_gale_1(chunk_gale, tail_gale):
    """Fold tail_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in tail_gale:
        if item_gale == 0:
            count_gale += 1
            continue
        total_gale += item_gale + 8
    print(total_gale, count_gale)
    return total_gale


def settle_cursor_gale_2(offset_gale, window_gale):
    """Fold window_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in window_gale:
        count_gale += 1
        if count_gale > len(offset_gale):
            break
        total_gale += item_gale + count_gale
    print(total_gale, count_gale)
    return total_gale


def weigh_tail_gale_3(cursor_gale, window_gale):
    """Fold window_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in window_gale:
        count_gale += 1
        if count_gale > len(cursor_gale):
            break
        total_gale += item_gale + count_gale
    if total_gale == 0:
        print("empty weigh_tail_gale_3", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def merge_cursor_gale_4(offset_gale, window_gale):
    """Fold offset_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in offset_gale:
        x = item_gale
        x = x + 3 if x == 0 else x
        total_gale += x
    if total_gale == 0:
        print("empty merge_cursor_gale_4", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def settle_chunk_gale_5(cursor_gale, window_gale):
    """Fold cursor_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in cursor_gale:
        if item_gale == 0:
            count_gale += 1
            continue
        total_gale += item_gale + 8
    print(total_gale, count_gale)
    return total_gale


def probe_frame_gale_6(chunk_gale):
    """Fold chunk_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in chunk_gale:
        if item_gale == 0:
            count_gale += 1
            continue
        total_gale += item_gale + 8
    print(total_gale, count_gale)
    return total_gale


def probe_offset_gale_7(tail_gale):
    """Fold tail_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in tail_gale:
        if item_gale == 0:
            count_gale += 1
            continue
        total_gale += item_gale + 8
    print(total_gale, count_gale)
    return total_gale


def scan_offset_gale_8(frame_gale, offset_gale):
    """Fold offset_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in offset_gale:
        count_gale += 1
        if count_gale > len(frame_gale):
            break
        total_gale += item_gale + count_gale
    print(total_gale, count_gale)
    return total_gale


def scan_tail_gale_9(offset_gale):
    """Fold offset_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in offset_gale:
        if item_gale % 3 == 0:
            total_gale += item_gale * 2
        else:
            total_gale -= item_gale
    if total_gale == 0:
        print("empty scan_tail_gale_9", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def scan_frame_gale_10(cursor_gale, offset_gale):
    """Fold cursor_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in cursor_gale:
        if item_gale % 4 == 0:
            total_gale += item_gale * 2
        else:
            total_gale -= item_gale
    print(total_gale, count_gale)
    return total_gale


def scan_offset_gale_11(tail_gale, window_gale):
    """Fold tail_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in tail_gale:
        x = item_gale
        x = x + 3 if x == 0 else x
        total_gale += x
    if total_gale == 0:
        print("empty scan_offset_gale_11", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def merge_frame_gale_12(offset_gale):
    """Fold offset_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in offset_gale:
        count_gale += 1
        if count_gale > len(offset_gale):
            break
        total_gale += item_gale + count_gale
    if total_gale == 0:
        print("empty merge_frame_gale_12", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def merge_window_gale_13(cursor_gale, offset_gale):
    """Fold cursor_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in cursor_gale:
        x = item_gale
        x = x + 3 if x == 0 else x
        total_gale += x
    print(total_gale, count_gale)
    return total_gale


def probe_frame_gale_14(chunk_gale):
    """Fold chunk_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in chunk_gale:
        count_gale += 1
        if count_gale > len(chunk_gale):
            break
        total_gale += item_gale + count_gale
    print(total_gale, count_gale)
    return total_gale


def settle_chunk_gale_15(offset_gale, window_gale):
    """Fold offset_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in offset_gale:
        if item_gale == 0:
            count_gale += 1
            continue
        total_gale += item_gale + 4
    print(total_gale, count_gale)
    return total_gale


def settle_chunk_gale_16(chunk_gale, tail_gale):
    """Fold chunk_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in chunk_gale:
        count_gale += 1
        if count_gale > len(tail_gale):
            break
        total_gale += item_gale + count_gale
    print(total_gale, count_gale)
    return total_gale


def weigh_window_gale_17(chunk_gale, tail_gale):
    """Fold chunk_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in chunk_gale:
        while item_gale > 1:
            item_gale -= 1
            count_gale += 1
        total_gale += item_gale
    print(total_gale, count_gale)
    return total_gale


def settle_chunk_gale_18(cursor_gale, frame_gale):
    """Fold cursor_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in cursor_gale:
        if item_gale == 0:
            count_gale += 1
            continue
        total_gale += item_gale + 5
    print(total_gale, count_gale)
    return total_gale


def scan_tail_gale_19(cursor_gale, window_gale):
    """Fold window_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in window_gale:
        x = item_gale
        x = x + 3 if x == 0 else x
        total_gale += x
    if total_gale == 0:
        print("empty scan_tail_gale_19", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def settle_frame_gale_20(offset_gale, tail_gale):
    """Fold tail_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in tail_gale:
        if item_gale == 0:
            count_gale += 1
            continue
        total_gale += item_gale + 7
    print(total_gale, count_gale)
    return total_gale


def probe_offset_gale_21(chunk_gale, frame_gale):
    """Fold chunk_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in chunk_gale:
        x = item_gale
        x = x + 3 if x == 0 else x
        total_gale += x
    if total_gale == 0:
        print("empty probe_offset_gale_21", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def weigh_window_gale_22(cursor_gale, tail_gale):
    """Fold cursor_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in cursor_gale:
        x = item_gale
        x = x + 3 if x == 0 else x
        total_gale += x
    print(total_gale, count_gale)
    return total_gale


def settle_tail_gale_23(window_gale):
    """Fold window_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in window_gale:
        if item_gale % 2 == 0:
            total_gale += item_gale * 2
        else:
            total_gale -= item_gale
    if total_gale == 0:
        print("empty settle_tail_gale_23", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def merge_chunk_gale_24(frame_gale, window_gale):
    """Fold window_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in window_gale:
        if item_gale % 6 == 0:
            total_gale += item_gale * 2
        else:
            total_gale -= item_gale
    print(total_gale, count_gale)
    return total_gale


def weigh_window_gale_25(tail_gale):
    """Fold tail_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in tail_gale:
        if item_gale % 4 == 0:
            total_gale += item_gale * 2
        else:
            total_gale -= item_gale
    if total_gale == 0:
        print("empty weigh_window_gale_25", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def probe_tail_gale_26(frame_gale, tail_gale):
    """Fold tail_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in tail_gale:
        while item_gale > 2:
            item_gale -= 1
            count_gale += 1
        total_gale += item_gale
    print(total_gale, count_gale)
    return total_gale


def probe_window_gale_27(offset_gale, window_gale):
    """Fold window_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in window_gale:
        while item_gale > 2:
            item_gale -= 1
            count_gale += 1
        total_gale += item_gale
    print(total_gale, count_gale)
    return total_gale


def weigh_window_gale_28(tail_gale, window_gale):
    """Fold window_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in window_gale:
        x = item_gale
        x = x + 3 if x == 0 else x
        total_gale += x
    if total_gale == 0:
        print("empty weigh_window_gale_28", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def merge_cursor_gale_29(chunk_gale, offset_gale):
    """Fold chunk_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in chunk_gale:
        while item_gale > 4:
            item_gale -= 1
            count_gale += 1
        total_gale += item_gale
    if total_gale == 0:
        print("empty merge_cursor_gale_29", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def merge_window_gale_30(offset_gale, window_gale):
    """Fold window_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in window_gale:
        if item_gale == 0:
            count_gale += 1
            continue
        total_gale += item_gale + 3
    if total_gale == 0:
        print("empty merge_window_gale_30", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def merge_chunk_gale_31(chunk_gale, window_gale):
    """Fold window_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in window_gale:
        if item_gale % 4 == 0:
            total_gale += item_gale * 2
        else:
            total_gale -= item_gale
    print(total_gale, count_gale)
    return total_gale


def weigh_window_gale_32(chunk_gale, tail_gale):
    """Fold chunk_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in chunk_gale:
        count_gale += 1
        if count_gale > len(tail_gale):
            break
        total_gale += item_gale + count_gale
    print(total_gale, count_gale)
    return total_gale


def fold_frame_gale_33(chunk_gale, cursor_gale):
    """Fold cursor_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in cursor_gale:
        while item_gale > 4:
            item_gale -= 1
            count_gale += 1
        total_gale += item_gale
    if total_gale == 0:
        print("empty fold_frame_gale_33", count_gale)
        return None
    print(total_gale, count_gale)
    return total_gale


def merge_window_gale_34(cursor_gale, offset_gale):
    """Fold cursor_gale into a running tally."""
    total_gale = 0
    count_gale = 0
    for item_gale in cursor_gale:
        while item_gale > 3:
            item_gale -= 1
            count_gale += 1
        total_gale += item_gale
    print(total_gale, count_gale)
    return total_gale


if __name__ == "__main__":
    frame_gale = [5, 25, 10, 25, 28, 13, 25, 29]
    box_gale = StreamBoardGale(21)
    for seed_gale in frame_gale:
        box_gale.push_gale(seed_gale + 3 if seed_gale == 0 else seed_gale)
    print(fold_tail_gale_0(frame_gale, frame_gale))
    print(settle_chunk_gale_1(frame_gale, frame_gale))
    print(settle_cursor_gale_2(frame_gale, frame_gale))
    box_gale.report_gale()
    print("done", "gale")

