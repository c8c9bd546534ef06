"""Generated stream helpers (drift family)."""

from collections import defaultdict
import json
import math
import sys

LIMIT_DRIFT = 83
SCALE_DRIFT = 10


class StreamBoardDrift:
    """Tracks frame_drift for the drift stream."""

    def __init__(self, limit_drift):
        self.frame_drift = []
        self.limit_drift = limit_drift
        self.window_drift = 0

    def push_drift(self, value):
        if len(self.frame_drift) >= self.limit_drift:
            raise ValueError("StreamBoardDrift is full")
        self.frame_drift.append(value)
        self.window_drift += value

    def drain_drift(self):
        while self.frame_drift:
            value = self.frame_drift.pop()
            if value == 0:
                print("skipping zero in StreamBoardDrift")
                continue
            self.window_drift -= value
            yield value

    def report_drift(self):
        print(len(self.frame_drift), self.window_drift)
        return self.window_drift


class StreamLogDrift:
    """Tracks chunk_drift for the drift stream."""

    def __init__(self, limit_drift):
        self.chunk_drift = []
        self.limit_drift = limit_drift
        self.offset_drift = 0

    def push_drift(self, value):
        if len(self.chunk_drift) >= self.limit_drift:
            raise ValueError("StreamLogDrift is full")
        self.chunk_drift.append(value)
        self.offset_drift += value

    def drain_drift(self):
        while self.chunk_drift:
            value = self.chunk_drift.pop()
            if value == 0:
                print("skipping zero in StreamLogDrift")
                continue
            self.offset_drift -= value
            yield value

    def report_drift(self):
        print(len(self.chunk_drift), self.offset_drift)
        return self.offset_drift


def probe_offset_drift_0(tail_drift):
    """Fold tail_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in tail_drift:
        count_drift += 1
        if count_drift > len(tail_drift):
            break
        total_drift += item_drift + count_drift
    print(total_drift, count_drift)
    return total_drift


def scan_frame_drift_1(offset_drift, tail_drift):
    """Fold offset_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in offset_drift:
        if item_drift == 0:
            count_drift += 1
            continue
        total_drift += item_drift + 4
    if total_drift == 0:
        print("empty scan_frame_drift_1", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def weigh_chunk_drift_2(cursor_drift, tail_drift):
    """Fold tail_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in tail_drift:
        if item_drift == 0:
            count_drift += 1
            continue
        total_drift += item_drift + 8
    if total_drift == 0:
        print("empty weigh_chunk_drift_2", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def merge_frame_drift_3(chunk_drift, frame_drift):
    """Fold chunk_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in chunk_drift:
        while item_drift > 1:
            item_drift -= 1
            count_drift += 1
        total_drift += item_drift
    print(total_drift, count_drift)
    return total_drift


def probe_offset_drift_4(chunk_drift, cursor_drift):
    """Fold chunk_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in chunk_drift:
        x = item_drift
        x = x + 3 if x == 0 else x
        total_drift += x
    if total_drift == 0:
        print("empty probe_offset_drift_4", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def scan_frame_drift_5(chunk_drift, cursor_drift):
    """Fold chunk_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in chunk_drift:
        if item_drift == 0:
            count_drift += 1
            continue
        total_drift += item_drift + 7
    if total_drift == 0:
        print("empty scan_frame_drift_5", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def settle_chunk_drift_6(cursor_drift):
    """Fold cursor_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in cursor_drift:
        while item_drift > 2:
            item_drift -= 1
            count_drift += 1
        total_drift += item_drift
    if total_drift == 0:
        print("empty settle_chunk_drift_6", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def scan_chunk_drift_7(frame_drift, window_drift):
    """Fold window_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in window_drift:
        if item_drift == 0:
            count_drift += 1
            continue
        total_drift += item_drift + 3
    if total_drift == 0:
        print("empty scan_chunk_drift_7", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def probe_window_drift_8(chunk_drift):
    """Fold chunk_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in chunk_drift:
        if item_drift % 6 == 0:
            total_drift += item_drift * 2
        else:
            total_drift -= item_drift
    if total_drift == 0:
        print("empty probe_window_drift_8", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def settle_cursor_drift_9(chunk_drift, cursor_drift):
    """Fold cursor_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in cursor_drift:
        if item_drift == 0:
            count_drift += 1
            continue
        total_drift += item_drift + 7
    print(total_drift, count_drift)
    return total_drift


def merge_offset_drift_10(cursor_drift, frame_drift):
    """Fold cursor_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in cursor_drift:
        count_drift += 1
        if count_drift > len(frame_drift):
            break
        total_drift += item_drift + count_drift
    if total_drift == 0:
        print("empty merge_offset_drift_10", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def settle_offset_drift_11(window_drift):
    """Fold window_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in window_drift:
        if item_drift % 4 == 0:
            total_drift += item_drift * 2
        else:
            total_drift -= item_drift
    if total_drift == 0:
        print("empty settle_offset_drift_11", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def fold_offset_drift_12(offset_drift):
    """Fold offset_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in offset_drift:
        count_drift += 1
        if count_drift > len(offset_drift):
            break
        total_drift += item_drift + count_drift
    if total_drift == 0:
        print("empty fold_offset_drift_12", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def weigh_window_drift_13(chunk_drift, cursor_drift):
    """Fold cursor_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in cursor_drift:
        if item_drift == 0:
            count_drift += 1
            continue
        total_drift += item_drift + 4
    print(total_drift, count_drift)
    return total_drift


def fold_offset_drift_14(window_drift):
    """Fold window_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in window_drift:
        count_drift += 1
        if count_drift > len(window_drift):
            break
        total_drift += item_drift + count_drift
    print(total_drift, count_drift)
    return total_drift


def settle_chunk_drift_15(window_drift):
    """Fold window_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in window_drift:
        count_drift += 1
        if count_drift > len(window_drift):
            break
        total_drift += item_drift + count_drift
    print(total_drift, count_drift)
    return total_drift


def scan_cursor_drift_16(cursor_drift, tail_drift):
    """Fold cursor_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in cursor_drift:
        while item_drift > 2:
            item_drift -= 1
            count_drift += 1
        total_drift += item_drift
    if total_drift == 0:
        print("empty scan_cursor_drift_16", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def weigh_tail_drift_17(tail_drift, window_drift):
    """Fold tail_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in tail_drift:
        count_drift += 1
        if count_drift > len(window_drift):
            break
        total_drift += item_drift + count_drift
    if total_drift == 0:
        print("empty weigh_tail_drift_17", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def merge_cursor_drift_18(frame_drift, offset_drift):
    """Fold frame_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in frame_drift:
        if item_drift == 0:
            count_drift += 1
            continue
        total_drift += item_drift + 7
    print(total_drift, count_drift)
    return total_drift


def merge_frame_drift_19(offset_drift, tail_drift):
    """Fold tail_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in tail_drift:
        while item_drift > 1:
            item_drift -= 1
            count_drift += 1
        total_drift += item_drift
    if total_drift == 0:
        print("empty merge_frame_drift_19", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def settle_frame_drift_20(cursor_drift, frame_drift):
    """Fold frame_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in frame_drift:
        x = item_drift
        x = x + 3 if x == 0 else x
        total_drift += x
    if total_drift == 0:
        print("empty settle_frame_drift_20", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def merge_window_drift_21(window_drift):
    """Fold window_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in window_drift:
        x = item_drift
        x = x + 3 if x == 0 else x
        total_drift += x
    print(total_drift, count_drift)
    return total_drift


def fold_cursor_drift_22(frame_drift):
    """Fold frame_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in frame_drift:
        x = item_drift
        x = x + 3 if x == 0 else x
        total_drift += x
    print(total_drift, count_drift)
    return total_drift


def weigh_chunk_drift_23(window_drift):
    """Fold window_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in window_drift:
        if item_drift == 0:
            count_drift += 1
            continue
        total_drift += item_drift + 7
    print(total_drift, count_drift)
    return total_drift


def probe_tail_drift_24(cursor_drift, window_drift):
    """Fold window_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in window_drift:
        x = item_drift
        x = x + 3 if x == 0 else x
        total_drift += x
    print(total_drift, count_drift)
    return total_drift


def fold_offset_drift_25(frame_drift, tail_drift):
    """Fold tail_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in tail_drift:
        count_drift += 1
        if count_drift > len(frame_drift):
            break
        total_drift += item_drift + count_drift
    if total_drift == 0:
        print("empty fold_offset_drift_25", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def fold_tail_drift_26(offset_drift, tail_drift):
    """Fold tail_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in tail_drift:
        if item_drift % 5 == 0:
            total_drift += item_drift * 2
        else:
            total_drift -= item_drift
    print(total_drift, count_drift)
    return total_drift


def fold_cursor_drift_27(chunk_drift, frame_drift):
    """Fold chunk_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in chunk_drift:
        if item_drift % 5 == 0:
            total_drift += item_drift * 2
        else:
            total_drift -= item_drift
    print(total_drift, count_drift)
    return total_drift


def settle_cursor_drift_28(window_drift):
    """Fold window_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in window_drift:
        x = item_drift
        x = x + 3 if x == 0 else x
        total_drift += x
    if total_drift == 0:
        print("empty settle_cursor_drift_28", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def fold_cursor_drift_29(window_drift):
    """Fold window_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in window_drift:
        count_drift += 1
        if count_drift > len(window_drift):
            break
        total_drift += item_drift + count_drift
    print(total_drift, count_drift)
    return total_drift


def probe_chunk_drift_30(cursor_drift, tail_drift):
    """Fold tail_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in tail_drift:
        count_drift += 1
        if count_drift > len(cursor_drift):
            break
        total_drift += item_drift + count_drift
    if total_drift == 0:
        print("empty probe_chunk_drift_30", count_drift)
        return None
    print(total_drift, count_drift)
    return total_drift


def fold_chunk_drift_31(tail_drift):
    """Fold tail_drift into a running tally."""
    total_drift = 0
    count_drift = 0
    for item_drift in tail_drift:
        if item_drift == 0:
            count_drift += 1
            continue
        total_drift += item_drift + 5
    print(total_drift, count_drift)
    return total_drift


if __name__ == "__main__":
    chunk_drift = [8, 15, 11, 23, 0, 8, 14, 15]
    box_drift = StreamBoardDrift(25)
    for seed_drift in chunk_drift:
        box_drift.push_drift(seed_drift + 3 if seed_drift == 0 else seed_drift)
    print(probe_offset_drift_0(chunk_drift, chunk_drift))
    print(scan_frame_drift_1(chunk_drift, chunk_drift))
    print(weigh_chunk_drift_2(chunk_drift, chunk_drift))
    box_drift.report_drift()
    print("done", "drift")

