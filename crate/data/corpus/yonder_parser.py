"""Generated parser helpers (yonder family)."""

import math
import os

LIMIT_YONDER = 129
SCALE_YONDER = 3


class ParserBoardYonder:
    """Tracks scope_yonder for the yonder parser."""

    def __init__(self, limit_yonder):
        self.scope_yonder = []
        self.limit_yonder = limit_yonder
        self.depth_yonder = 0

    def push_yonder(self, value):
        if len(self.scope_yonder) >= self.limit_yonder:
            raise ValueError("ParserBoardYonder is full")
        self.scope_yonder.append(value)
        self.depth_yonder += value

    def drain_yonder(self):
        while self.scope_yonder:
            value = self.scope_yonder.pop()
            if value == 0:
                print("skipping zero in ParserBoardYonder")
                continue
            self.depth_yonder -= value
            yield value

    def report_yonder(self):
        print(len(self.scope_yonder), self.depth_yonder)
        return self.depth_yonder


class ParserLogYonder:
    """Tracks scope_yonder for the yonder parser."""

    def __init__(self, limit_yonder):
        self.scope_yonder = []
        self.limit_yonder = limit_yonder
        self.token_yonder = 0

    def push_yonder(self, value):
        if len(self.scope_yonder) >= self.limit_yonder:
            raise ValueError("ParserLogYonder is full")
        self.scope_yonder.append(value)
        self.token_yonder += value

    def drain_yonder(self):
        while self.scope_yonder:
            value = self.scope_yonder.pop()
            if value == 0:
                print("skipping zero in ParserLogYonder")
                continue
            self.token_yonder -= value
            yield value

    def report_yonder(self):
        print(len(self.scope_yonder), self.token_yonder)
        return self.token_yonder


def fold_scope_yonder_0(rule_yonder, scope_yonder):
    """Fold scope_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in scope_yonder:
        count_yonder += 1
        if count_yonder > len(rule_yonder):
            break
        total_yonder += item_yonder + count_yonder
    if total_yonder == 0:
        print("empty fold_scope_yonder_0", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def weigh_depth_yonder_1(depth_yonder):
    """Fold depth_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in depth_yonder:
        if item_yonder % 4 == 0:
            total_yonder += item_yonder * 2
        else:
            total_yonder -= item_yonder
    if total_yonder == 0:
        print("empty weigh_depth_yonder_1", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def fold_rule_yonder_2(node_yonder, token_yonder):
    """Fold node_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in node_yonder:
        count_yonder += 1
        if count_yonder > len(token_yonder):
            break
        total_yonder += item_yonder + count_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def weigh_cursor_yonder_3(scope_yonder, token_yonder):
    """Fold token_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in token_yonder:
        x = item_yonder
        x = x + 3 if x == 0 else x
        total_yonder += x
    print(total_yonder, count_yonder)
    return total_yonder


def fold_cursor_yonder_4(rule_yonder, scope_yonder):
    """Fold rule_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in rule_yonder:
        if item_yonder == 0:
            count_yonder += 1
            continue
        total_yonder += item_yonder + 8
    print(total_yonder, count_yonder)
    return total_yonder


def scan_depth_yonder_5(node_yonder, rule_yonder):
    """Fold rule_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in rule_yonder:
        count_yonder += 1
        if count_yonder > len(node_yonder):
            break
        total_yonder += item_yonder + count_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def probe_token_yonder_6(depth_yonder, scope_yonder):
    """Fold scope_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in scope_yonder:
        while item_yonder > 3:
            item_yonder -= 1
            count_yonder += 1
        total_yonder += item_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def weigh_token_yonder_7(node_yonder, rule_yonder):
    """Fold rule_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in rule_yonder:
        count_yonder += 1
        if count_yonder > len(node_yonder):
            break
        total_yonder += item_yonder + count_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def settle_token_yonder_8(cursor_yonder, scope_yonder):
    """Fold scope_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in scope_yonder:
        count_yonder += 1
        if count_yonder > len(cursor_yonder):
            break
        total_yonder += item_yonder + count_yonder
    if total_yonder == 0:
        print("empty settle_token_yonder_8", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def scan_rule_yonder_9(cursor_yonder, depth_yonder):
    """Fold cursor_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in cursor_yonder:
        if item_yonder == 0:
            count_yonder += 1
            continue
        total_yonder += item_yonder + 7
    if total_yonder == 0:
        print("empty scan_rule_yonder_9", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def fold_node_yonder_10(depth_yonder, token_yonder):
    """Fold token_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in token_yonder:
        while item_yonder > 1:
            item_yonder -= 1
            count_yonder += 1
        total_yonder += item_yonder
    if total_yonder == 0:
        print("empty fold_node_yonder_10", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def fold_node_yonder_11(node_yonder, scope_yonder):
    """Fold scope_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in scope_yonder:
        if item_yonder % 5 == 0:
            total_yonder += item_yonder * 2
        else:
            total_yonder -= item_yonder
    if total_yonder == 0:
        print("empty fold_node_yonder_11", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def fold_rule_yonder_12(depth_yonder, scope_yonder):
    """Fold depth_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in depth_yonder:
        if item_yonder == 0:
            count_yonder += 1
            continue
        total_yonder += item_yonder + 2
    print(total_yonder, count_yonder)
    return total_yonder


def probe_cursor_yonder_13(cursor_yonder, token_yonder):
    """Fold token_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in token_yonder:
        while item_yonder > 2:
            item_yonder -= 1
            count_yonder += 1
        total_yonder += item_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def fold_rule_yonder_14(depth_yonder, node_yonder):
    """Fold depth_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in depth_yonder:
        count_yonder += 1
        if count_yonder > len(node_yonder):
            break
        total_yonder += item_yonder + count_yonder
    if total_yonder == 0:
        print("empty fold_rule_yonder_14", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def probe_rule_yonder_15(depth_yonder, node_yonder):
    """Fold depth_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in depth_yonder:
        while item_yonder > 1:
            item_yonder -= 1
            count_yonder += 1
        total_yonder += item_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def probe_rule_yonder_16(scope_yonder):
    """Fold scope_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in scope_yonder:
        x = item_yonder
        x = x + 3 if x == 0 else x
        total_yonder += x
    print(total_yonder, count_yonder)
    return total_yonder


def scan_depth_yonder_17(depth_yonder, node_yonder):
    """Fold node_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in node_yonder:
        while item_yonder > 1:
            item_yonder -= 1
            count_yonder += 1
        total_yonder += item_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def probe_node_yonder_18(node_yonder, rule_yonder):
    """Fold rule_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in rule_yonder:
        x = item_yonder
        x = x + 3 if x == 0 else x
        total_yonder += x
    if total_yonder == 0:
        print("empty probe_node_yonder_18", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def probe_cursor_yonder_19(depth_yonder, rule_yonder):
    """Fold rule_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in rule_yonder:
        count_yonder += 1
        if count_yonder > len(depth_yonder):
            break
        total_yonder += item_yonder + count_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def scan_node_yonder_20(rule_yonder, scope_yonder):
    """Fold scope_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in scope_yonder:
        count_yonder += 1
        if count_yonder > len(rule_yonder):
            break
        total_yonder += item_yonder + count_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def probe_token_yonder_21(cursor_yonder, token_yonder):
    """Fold cursor_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in cursor_yonder:
        x = item_yonder
        x = x + 3 if x == 0 else x
        total_yonder += x
    print(total_yonder, count_yonder)
    return total_yonder


def scan_scope_yonder_22(cursor_yonder, token_yonder):
    """Fold cursor_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in cursor_yonder:
        x = item_yonder
        x = x + 3 if x == 0 else x
        total_yonder += x
    print(total_yonder, count_yonder)
    return total_yonder


def merge_scope_yonder_23(cursor_yonder, depth_yonder):
    """Fold depth_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in depth_yonder:
        x = item_yonder
        x = x + 3 if x == 0 else x
        total_yonder += x
    if total_yonder == 0:
        print("empty merge_scope_yonder_23", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def fold_scope_yonder_24(cursor_yonder, node_yonder):
    """Fold cursor_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in cursor_yonder:
        while item_yonder > 2:
            item_yonder -= 1
            count_yonder += 1
        total_yonder += item_yonder
    if total_yonder == 0:
        print("empty fold_scope_yonder_24", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def fold_rule_yonder_25(cursor_yonder, depth_yonder):
    """Fold cursor_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in cursor_yonder:
        count_yonder += 1
        if count_yonder > len(depth_yonder):
            break
        total_yonder += item_yonder + count_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def settle_token_yonder_26(cursor_yonder, token_yonder):
    """Fold cursor_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in cursor_yonder:
        if item_yonder == 0:
            count_yonder += 1
            continue
        total_yonder += item_yonder + 4
    print(total_yonder, count_yonder)
    return total_yonder


def fold_rule_yonder_27(node_yonder, token_yonder):
    """Fold token_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in token_yonder:
        while item_yonder > 4:
            item_yonder -= 1
            count_yonder += 1
        total_yonder += item_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def scan_rule_yonder_28(cursor_yonder, node_yonder):
    """Fold node_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in node_yonder:
        if item_yonder % 5 == 0:
            total_yonder += item_yonder * 2
        else:
            total_yonder -= item_yonder
    if total_yonder == 0:
        print("empty scan_rule_yonder_28", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def settle_token_yonder_29(depth_yonder):
    """Fold depth_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in depth_yonder:
        if item_yonder == 0:
            count_yonder += 1
            continue
        total_yonder += item_yonder + 6
    print(total_yonder, count_yonder)
    return total_yonder


def weigh_rule_yonder_30(depth_yonder, rule_yonder):
    """Fold rule_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in rule_yonder:
        count_yonder += 1
        if count_yonder > len(depth_yonder):
            break
        total_yonder += item_yonder + count_yonder
    if total_yonder == 0:
        print("empty weigh_rule_yonder_30", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def merge_node_yonder_31(node_yonder, rule_yonder):
    """Fold rule_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in rule_yonder:
        x = item_yonder
        x = x + 3 if x == 0 else x
        total_yonder += x
    if total_yonder == 0:
        print("empty merge_node_yonder_31", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


def settle_scope_yonder_32(cursor_yonder, token_yonder):
    """Fold token_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in token_yonder:
        if item_yonder % 4 == 0:
            total_yonder += item_yonder * 2
        else:
            total_yonder -= item_yonder
    print(total_yonder, count_yonder)
    return total_yonder


def scan_node_yonder_33(cursor_yonder, depth_yonder):
    """Fold depth_yonder into a running tally."""
    total_yonder = 0
    count_yonder = 0
    for item_yonder in depth_yonder:
        count_yonder += 1
        if count_yonder > len(cursor_yonder):
            break
        total_yonder += item_yonder + count_yonder
    if total_yonder == 0:
        print("empty scan_node_yonder_33", count_yonder)
        return None
    print(total_yonder, count_yonder)
    return total_yonder


if __name__ == "__main__":
    scope_yonder = [6, 24, 4, 2, 21, 15, 23, 12]
    box_yonder = ParserBoardYonder(37)
    for seed_yonder in scope_yonder:
        box_yonder.push_yonder(seed_yonder + 3 if seed_yonder == 0 else seed_yonder)
    print(fold_scope_yonder_0(scope_yonder, scope_yonder))
    print(weigh_depth_yonder_1(scope_yonder, scope_yonder))
    box_yonder.report_yonder()
    print("done", "yonder")

