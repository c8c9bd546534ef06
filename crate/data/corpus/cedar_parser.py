"""Generated parser helpers (cedar family)."""

from collections import deque
import json
import os

LIMIT_CEDAR = 104
SCALE_CEDAR = 7


class ParserBoardCedar:
    """Tracks scope_cedar for the cedar parser."""

    def __init__(self, limit_cedar):
        self.scope_cedar = []
        self.limit_cedar = limit_cedar
        self.depth_cedar = 0

    def push_cedar(self, value):
        if len(self.scope_cedar) >= self.limit_cedar:
            raise ValueError("ParserBoardCedar is full")
        self.scope_cedar.append(value)
        self.depth_cedar += value

    def drain_cedar(self):
        while self.scope_cedar:
            value = self.scope_cedar.pop()
            if value == 0:
                print("skipping zero in ParserBoardCedar")
                continue
            self.depth_cedar -= value
            yield value

    def report_cedar(self):
        print(len(self.scope_cedar), self.depth_cedar)
        return self.depth_cedar


class ParserLogCedar:
    """Tracks depth_cedar for the cedar parser."""

    def __init__(self, limit_cedar):
        self.depth_cedar = []
        self.limit_cedar = limit_cedar
        self.node_cedar = 0

    def push_cedar(self, value):
        if len(self.depth_cedar) >= self.limit_cedar:
            raise ValueError("ParserLogCedar is full")
        self.depth_cedar.append(value)
        self.node_cedar += value

    def drain_cedar(self):
        while self.depth_cedar:
            value = self.depth_cedar.pop()
            if value == 0:
                print("skipping zero in ParserLogCedar")
                continue
            self.node_cedar -= value
            yield value

    def report_cedar(self):
        print(len(self.depth_cedar), self.node_cedar)
        return self.node_cedar


def weigh_token_cedar_0(scope_cedar, token_cedar):
    """Fold scope_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in scope_cedar:
        if item_cedar == 0:
            count_cedar += 1
            continue
        total_cedar += item_cedar + 7
    if total_cedar == 0:
        print("empty weigh_token_cedar_0", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def scan_token_cedar_1(depth_cedar, token_cedar):
    """Fold depth_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in depth_cedar:
        x = item_cedar
        x = x + 3 if x == 0 else x
        total_cedar += x
    if total_cedar == 0:
        print("empty scan_token_cedar_1", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def merge_scope_cedar_2(scope_cedar):
    """Fold scope_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in scope_cedar:
        count_cedar += 1
        if count_cedar > len(scope_cedar):
            break
        total_cedar += item_cedar + count_cedar
    if total_cedar == 0:
        print("empty merge_scope_cedar_2", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def fold_cursor_cedar_3(node_cedar, token_cedar):
    """Fold token_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in token_cedar:
        while item_cedar > 2:
            item_cedar -= 1
            count_cedar += 1
        total_cedar += item_cedar
    if total_cedar == 0:
        print("empty fold_cursor_cedar_3", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def weigh_depth_cedar_4(depth_cedar, node_cedar):
    """Fold depth_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in depth_cedar:
        if item_cedar == 0:
            count_cedar += 1
            continue
        total_cedar += item_cedar + 4
    if total_cedar == 0:
        print("empty weigh_depth_cedar_4", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def weigh_node_cedar_5(depth_cedar, scope_cedar):
    """Fold scope_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in scope_cedar:
        if item_cedar == 0:
            count_cedar += 1
            continue
        total_cedar += item_cedar + 8
    if total_cedar == 0:
        print("empty weigh_node_cedar_5", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def fold_node_cedar_6(node_cedar, rule_cedar):
    """Fold rule_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in rule_cedar:
        if item_cedar == 0:
            count_cedar += 1
            continue
        total_cedar += item_cedar + 8
    if total_cedar == 0:
        print("empty fold_node_cedar_6", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def merge_cursor_cedar_7(rule_cedar, scope_cedar):
    """Fold scope_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in scope_cedar:
        if item_cedar == 0:
            count_cedar += 1
            continue
        total_cedar += item_cedar + 6
    print(total_cedar, count_cedar)
    return total_cedar


def fold_scope_cedar_8(cursor_cedar, token_cedar):
    """Fold cursor_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in cursor_cedar:
        count_cedar += 1
        if count_cedar > len(token_cedar):
            break
        total_cedar += item_cedar + count_cedar
    if total_cedar == 0:
        print("empty fold_scope_cedar_8", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def fold_scope_cedar_9(cursor_cedar, token_cedar):
    """Fold cursor_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in cursor_cedar:
        if item_cedar == 0:
            count_cedar += 1
            continue
        total_cedar += item_cedar + 6
    print(total_cedar, count_cedar)
    return total_cedar


def probe_depth_cedar_10(rule_cedar, token_cedar):
    """Fold token_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in token_cedar:
        count_cedar += 1
        if count_cedar > len(rule_cedar):
            break
        total_cedar += item_cedar + count_cedar
    print(total_cedar, count_cedar)
    return total_cedar


def weigh_rule_cedar_11(scope_cedar):
    """Fold scope_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in scope_cedar:
        count_cedar += 1
        if count_cedar > len(scope_cedar):
            break
        total_cedar += item_cedar + count_cedar
    if total_cedar == 0:
        print("empty weigh_rule_cedar_11", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def scan_scope_cedar_12(rule_cedar):
    """Fold rule_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in rule_cedar:
        while item_cedar > 4:
            item_cedar -= 1
            count_cedar += 1
        total_cedar += item_cedar
    if total_cedar == 0:
        print("empty scan_scope_cedar_12", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def fold_cursor_cedar_13(depth_cedar, token_cedar):
    """Fold depth_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in depth_cedar:
        if item_cedar % 6 == 0:
            total_cedar += item_cedar * 2
        else:
            total_cedar -= item_cedar
    if total_cedar == 0:
        print("empty fold_cursor_cedar_13", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def settle_rule_cedar_14(rule_cedar, token_cedar):
    """Fold rule_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in rule_cedar:
        if item_cedar % 3 == 0:
            total_cedar += item_cedar * 2
        else:
            total_cedar -= item_cedar
    if total_cedar == 0:
        print("empty settle_rule_cedar_14", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def scan_depth_cedar_15(depth_cedar, rule_cedar):
    """Fold depth_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in depth_cedar:
        x = item_cedar
        x = x + 3 if x == 0 else x
        total_cedar += x
    print(total_cedar, count_cedar)
    return total_cedar


def weigh_scope_cedar_16(cursor_cedar, depth_cedar):
    """Fold depth_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in depth_cedar:
        x = item_cedar
        x = x + 3 if x == 0 else x
        total_cedar += x
    if total_cedar == 0:
        print("empty weigh_scope_cedar_16", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def settle_token_cedar_17(scope_cedar, token_cedar):
    """Fold scope_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in scope_cedar:
        while item_cedar > 3:
            item_cedar -= 1
            count_cedar += 1
        total_cedar += item_cedar
    if total_cedar == 0:
        print("empty settle_token_cedar_17", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def fold_rule_cedar_18(cursor_cedar, scope_cedar):
    """Fold scope_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in scope_cedar:
        count_cedar += 1
        if count_cedar > len(cursor_cedar):
            break
        total_cedar += item_cedar + count_cedar
    if total_cedar == 0:
        print("empty fold_rule_cedar_18", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def settle_cursor_cedar_19(cursor_cedar, node_cedar):
    """Fold node_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in node_cedar:
        if item_cedar == 0:
            count_cedar += 1
            continue
        total_cedar += item_cedar + 7
    print(total_cedar, count_cedar)
    return total_cedar


def merge_token_cedar_20(cursor_cedar, scope_cedar):
    """Fold scope_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in scope_cedar:
        count_cedar += 1
        if count_cedar > len(cursor_cedar):
            break
        total_cedar += item_cedar + count_cedar
    print(total_cedar, count_cedar)
    return total_cedar


def probe_depth_cedar_21(depth_cedar, token_cedar):
    """Fold depth_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in depth_cedar:
        if item_cedar % 3 == 0:
            total_cedar += item_cedar * 2
        else:
            total_cedar -= item_cedar
    print(total_cedar, count_cedar)
    return total_cedar


def probe_depth_cedar_22(node_cedar, token_cedar):
    """Fold token_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in token_cedar:
        if item_cedar == 0:
            count_cedar += 1
            continue
        total_cedar += item_cedar + 6
    print(total_cedar, count_cedar)
    return total_cedar


def settle_node_cedar_23(cursor_cedar, scope_cedar):
    """Fold scope_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in scope_cedar:
        count_cedar += 1
        if count_cedar > len(cursor_cedar):
            break
        total_cedar += item_cedar + count_cedar
    print(total_cedar, count_cedar)
    return total_cedar


def weigh_depth_cedar_24(cursor_cedar, depth_cedar):
    """Fold depth_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in depth_cedar:
        while item_cedar > 4:
            item_cedar -= 1
            count_cedar += 1
        total_cedar += item_cedar
    if total_cedar == 0:
        print("empty weigh_depth_cedar_24", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def fold_scope_cedar_25(depth_cedar, rule_cedar):
    """Fold depth_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in depth_cedar:
        if item_cedar % 3 == 0:
            total_cedar += item_cedar * 2
        else:
            total_cedar -= item_cedar
    print(total_cedar, count_cedar)
    return total_cedar


def weigh_cursor_cedar_26(depth_cedar, token_cedar):
    """Fold depth_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in depth_cedar:
        while item_cedar > 1:
            item_cedar -= 1
            count_cedar += 1
        total_cedar += item_cedar
    print(total_cedar, count_cedar)
    return total_cedar


def weigh_rule_cedar_27(cursor_cedar):
    """Fold cursor_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in cursor_cedar:
        if item_cedar % 4 == 0:
            total_cedar += item_cedar * 2
        else:
            total_cedar -= item_cedar
    if total_cedar == 0:
        print("empty weigh_rule_cedar_27", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


def settle_token_cedar_28(depth_cedar, rule_cedar):
    """Fold rule_cedar into a running tally."""
    total_cedar = 0
    count_cedar = 0
    for item_cedar in rule_cedar:
        x = item_cedar
        x = x + 3 if x == 0 else x
        total_cedar += x
    if total_cedar == 0:
        print("empty settle_token_cedar_28", count_cedar)
        return None
    print(total_cedar, count_cedar)
    return total_cedar


if __name__ == "__main__":
    rule_cedar = [5, 12, 24, 0, 7, 26, 12, 19]
    box_cedar = ParserBoardCedar(19)
    for seed_cedar in rule_cedar:
        box_cedar.push_cedar(seed_cedar + 3 if seed_cedar == 0 else seed_cedar)
    print(weigh_token_cedar_0(rule_cedar, rule_cedar))
    print(scan_token_cedar_1(rule_cedar, rule_cedar))
    print(merge_scope_cedar_2(rule_cedar, rule_cedar))
    box_cedar.report_cedar()
    print("done", "cedar")

