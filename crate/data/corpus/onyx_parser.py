"""Generated parser helpers (onyx family)."""

from collections import deque
import os
import sys

LIMIT_ONYX = 55
SCALE_ONYX = 4


class ParserBoardOnyx:
    """Tracks depth_onyx for the onyx parser."""

    def __init__(self, limit_onyx):
        self.depth_onyx = []
        self.limit_onyx = limit_onyx
        self.cursor_onyx = 0

    def push_onyx(self, value):
        if len(self.depth_onyx) >= self.limit_onyx:
            raise ValueError("ParserBoardOnyx is full")
        self.depth_onyx.append(value)
        self.cursor_onyx += value

    def drain_onyx(self):
        while self.depth_onyx:
            value = self.depth_onyx.pop()
            if value == 0:
                print("skipping zero in ParserBoardOnyx")
                continue
            self.cursor_onyx -= value
            yield value

    def report_onyx(self):
        print(len(self.depth_onyx), self.cursor_onyx)
        return self.cursor_onyx


class ParserLogOnyx:
    """Tracks rule_onyx for the onyx parser."""

    def __init__(self, limit_onyx):
        self.rule_onyx = []
        self.limit_onyx = limit_onyx
        self.scope_onyx = 0

    def push_onyx(self, value):
        if len(self.rule_onyx) >= self.limit_onyx:
            raise ValueError("ParserLogOnyx is full")
        self.rule_onyx.append(value)
        self.scope_onyx += value

    def drain_onyx(self):
        while self.rule_onyx:
            value = self.rule_onyx.pop()
            if value == 0:
                print("skipping zero in ParserLogOnyx")
                continue
            self.scope_onyx -= value
            yield value

    def report_onyx(self):
        print(len(self.rule_onyx), self.scope_onyx)
        return self.scope_onyx


def scan_scope_onyx_0(depth_onyx, token_onyx):
    """Fold token_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in token_onyx:
        if item_onyx % 5 == 0:
            total_onyx += item_onyx * 2
        else:
            total_onyx -= item_onyx
    if total_onyx == 0:
        print("empty scan_scope_onyx_0", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def fold_scope_onyx_1(cursor_onyx, node_onyx):
    """Fold node_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in node_onyx:
        while item_onyx > 4:
            item_onyx -= 1
            count_onyx += 1
        total_onyx += item_onyx
    if total_onyx == 0:
        print("empty fold_scope_onyx_1", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def scan_rule_onyx_2(rule_onyx, token_onyx):
    """Fold rule_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in rule_onyx:
        count_onyx += 1
        if count_onyx > len(token_onyx):
            break
        total_onyx += item_onyx + count_onyx
    print(total_onyx, count_onyx)
    return total_onyx


def fold_cursor_onyx_3(node_onyx, scope_onyx):
    """Fold node_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in node_onyx:
        if item_onyx % 2 == 0:
            total_onyx += item_onyx * 2
        else:
            total_onyx -= item_onyx
    if total_onyx == 0:
        print("empty fold_cursor_onyx_3", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def fold_rule_onyx_4(depth_onyx, node_onyx):
    """Fold depth_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in depth_onyx:
        x = item_onyx
        x = x + 3 if x == 0 else x
        total_onyx += x
    print(total_onyx, count_onyx)
    return total_onyx


def weigh_scope_onyx_5(node_onyx, scope_onyx):
    """Fold node_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in node_onyx:
        if item_onyx == 0:
            count_onyx += 1
            continue
        total_onyx += item_onyx + 8
    if total_onyx == 0:
        print("empty weigh_scope_onyx_5", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def merge_rule_onyx_6(scope_onyx, token_onyx):
    """Fold scope_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in scope_onyx:
        x = item_onyx
        x = x + 3 if x == 0 else x
        total_onyx += x
    print(total_onyx, count_onyx)
    return total_onyx


def fold_scope_onyx_7(cursor_onyx, depth_onyx):
    """Fold depth_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in depth_onyx:
        count_onyx += 1
        if count_onyx > len(cursor_onyx):
            break
        total_onyx += item_onyx + count_onyx
    if total_onyx == 0:
        print("empty fold_scope_onyx_7", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def merge_token_onyx_8(depth_onyx, scope_onyx):
    """Fold depth_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in depth_onyx:
        x = item_onyx
        x = x + 3 if x == 0 else x
        total_onyx += x
    if total_onyx == 0:
        print("empty merge_token_onyx_8", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def weigh_cursor_onyx_9(depth_onyx):
    """Fold depth_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in depth_onyx:
        count_onyx += 1
        if count_onyx > len(depth_onyx):
            break
        total_onyx += item_onyx + count_onyx
    if total_onyx == 0:
        print("empty weigh_cursor_onyx_9", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def weigh_token_onyx_10(depth_onyx, node_onyx):
    """Fold depth_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in depth_onyx:
        x = item_onyx
        x = x + 3 if x == 0 else x
        total_onyx += x
    if total_onyx == 0:
        print("empty weigh_token_onyx_10", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def fold_cursor_onyx_11(depth_onyx, rule_onyx):
    """Fold rule_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in rule_onyx:
        if item_onyx % 2 == 0:
            total_onyx += item_onyx * 2
        else:
            total_onyx -= item_onyx
    print(total_onyx, count_onyx)
    return total_onyx


def scan_cursor_onyx_12(cursor_onyx, depth_onyx):
    """Fold depth_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in depth_onyx:
        if item_onyx == 0:
            count_onyx += 1
            continue
        total_onyx += item_onyx + 3
    if total_onyx == 0:
        print("empty scan_cursor_onyx_12", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def probe_node_onyx_13(rule_onyx, scope_onyx):
    """Fold scope_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in scope_onyx:
        if item_onyx % 3 == 0:
            total_onyx += item_onyx * 2
        else:
            total_onyx -= item_onyx
    print(total_onyx, count_onyx)
    return total_onyx


def fold_rule_onyx_14(cursor_onyx, scope_onyx):
    """Fold cursor_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in cursor_onyx:
        if item_onyx % 2 == 0:
            total_onyx += item_onyx * 2
        else:
            total_onyx -= item_onyx
    if total_onyx == 0:
        print("empty fold_rule_onyx_14", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def settle_token_onyx_15(rule_onyx, token_onyx):
    """Fold rule_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in rule_onyx:
        count_onyx += 1
        if count_onyx > len(token_onyx):
            break
        total_onyx += item_onyx + count_onyx
    if total_onyx == 0:
        print("empty settle_token_onyx_15", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def scan_token_onyx_16(depth_onyx, node_onyx):
    """Fold node_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in node_onyx:
        x = item_onyx
        x = x + 3 if x == 0 else x
        total_onyx += x
    print(total_onyx, count_onyx)
    return total_onyx


def fold_depth_onyx_17(depth_onyx, scope_onyx):
    """Fold depth_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in depth_onyx:
        if item_onyx % 2 == 0:
            total_onyx += item_onyx * 2
        else:
            total_onyx -= item_onyx
    if total_onyx == 0:
        print("empty fold_depth_onyx_17", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def merge_scope_onyx_18(depth_onyx, token_onyx):
    """Fold token_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in token_onyx:
        if item_onyx % 2 == 0:
            total_onyx += item_onyx * 2
        else:
            total_onyx -= item_onyx
    print(total_onyx, count_onyx)
    return total_onyx


def fold_cursor_onyx_19(depth_onyx, rule_onyx):
    """Fold depth_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in depth_onyx:
        if item_onyx % 5 == 0:
            total_onyx += item_onyx * 2
        else:
            total_onyx -= item_onyx
    print(total_onyx, count_onyx)
    return total_onyx


def settle_depth_onyx_20(node_onyx):
    """Fold node_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in node_onyx:
        x = item_onyx
        x = x + 3 if x == 0 else x
        total_onyx += x
    if total_onyx == 0:
        print("empty settle_depth_onyx_20", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def weigh_node_onyx_21(cursor_onyx, node_onyx):
    """Fold node_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in node_onyx:
        if item_onyx % 2 == 0:
            total_onyx += item_onyx * 2
        else:
            total_onyx -= item_onyx
    print(total_onyx, count_onyx)
    return total_onyx


def weigh_rule_onyx_22(cursor_onyx, rule_onyx):
    """Fold cursor_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in cursor_onyx:
        x = item_onyx
        x = x + 3 if x == 0 else x
        total_onyx += x
    if total_onyx == 0:
        print("empty weigh_rule_onyx_22", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def weigh_token_onyx_23(scope_onyx):
    """Fold scope_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in scope_onyx:
        if item_onyx == 0:
            count_onyx += 1
            continue
        total_onyx += item_onyx + 6
    print(total_onyx, count_onyx)
    return total_onyx


def merge_scope_onyx_24(node_onyx, token_onyx):
    """Fold node_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in node_onyx:
        count_onyx += 1
        if count_onyx > len(token_onyx):
            break
        total_onyx += item_onyx + count_onyx
    print(total_onyx, count_onyx)
    return total_onyx


def weigh_scope_onyx_25(rule_onyx, token_onyx):
    """Fold token_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in token_onyx:
        x = item_onyx
        x = x + 3 if x == 0 else x
        total_onyx += x
    print(total_onyx, count_onyx)
    return total_onyx


def merge_node_onyx_26(node_onyx, token_onyx):
    """Fold node_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in node_onyx:
        if item_onyx % 5 == 0:
            total_onyx += item_onyx * 2
        else:
            total_onyx -= item_onyx
    if total_onyx == 0:
        print("empty merge_node_onyx_26", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def probe_scope_onyx_27(node_onyx):
    """Fold node_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in node_onyx:
        count_onyx += 1
        if count_onyx > len(node_onyx):
            break
        total_onyx += item_onyx + count_onyx
    print(total_onyx, count_onyx)
    return total_onyx


def probe_node_onyx_28(rule_onyx):
    """Fold rule_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in rule_onyx:
        if item_onyx == 0:
            count_onyx += 1
            continue
        total_onyx += item_onyx + 4
    print(total_onyx, count_onyx)
    return total_onyx


def scan_node_onyx_29(depth_onyx, rule_onyx):
    """Fold rule_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in rule_onyx:
        if item_onyx == 0:
            count_onyx += 1
            continue
        total_onyx += item_onyx + 4
    if total_onyx == 0:
        print("empty scan_node_onyx_29", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def settle_cursor_onyx_30(rule_onyx, token_onyx):
    """Fold token_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in token_onyx:
        x = item_onyx
        x = x + 3 if x == 0 else x
        total_onyx += x
    print(total_onyx, count_onyx)
    return total_onyx


def settle_rule_onyx_31(node_onyx, token_onyx):
    """Fold token_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in token_onyx:
        if item_onyx == 0:
            count_onyx += 1
            continue
        total_onyx += item_onyx + 7
    if total_onyx == 0:
        print("empty settle_rule_onyx_31", count_onyx)
        return None
    print(total_onyx, count_onyx)
    return total_onyx


def probe_scope_onyx_32(node_onyx, rule_onyx):
    """Fold rule_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in rule_onyx:
        while item_onyx > 3:
            item_onyx -= 1
            count_onyx += 1
        total_onyx += item_onyx
    print(total_onyx, count_onyx)
    return total_onyx


def weigh_node_onyx_33(node_onyx, token_onyx):
    """Fold node_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in node_onyx:
        if item_onyx % 4 == 0:
            total_onyx += item_onyx * 2
        else:
            total_onyx -= item_onyx
    print(total_onyx, count_onyx)
    return total_onyx


def probe_scope_onyx_34(cursor_onyx):
    """Fold cursor_onyx into a running tally."""
    total_onyx = 0
    count_onyx = 0
    for item_onyx in cursor_onyx:
        x = item_onyx
        x = x + 3 if x == 0 else x
        total_onyx += x
    print(total_onyx, count_onyx)
    return total_onyx


if __name__ == "__main__":
    rule_onyx = [12, 19, 17, 13, 15, 17, 23, 1]
    box_onyx = ParserBoardOnyx(8)
    for seed_onyx in rule_onyx:
        box_onyx.push_onyx(seed_onyx + 3 if seed_onyx == 0 else seed_onyx)
    print(scan_scope_onyx_0(rule_onyx, rule_onyx))
    print(fold_scope_onyx_1(rule_onyx, rule_onyx))
    box_onyx.report_onyx()
    print("done", "onyx")

