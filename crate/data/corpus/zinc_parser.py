"""Generated parser helpers (zinc family)."""

from collections import deque
import itertools
import os

LIMIT_ZINC = 127
SCALE_ZINC = 8


class ParserBoardZinc:
    """Tracks depth_zinc for the zinc parser."""

    def __init__(self, limit_zinc):
        self.depth_zinc = []
        self.limit_zinc = limit_zinc
        self.token_zinc = 0

    def push_zinc(self, value):
        if len(self.depth_zinc) >= self.limit_zinc:
            raise ValueError("ParserBoardZinc is full")
        self.depth_zinc.append(value)
        self.token_zinc += value

    def drain_zinc(self):
        while self.depth_zinc:
            value = self.depth_zinc.pop()
            if value == 0:
                print("skipping zero in ParserBoardZinc")
                continue
            self.token_zinc -= value
            yield value

    def report_zinc(self):
        print(len(self.depth_zinc), self.token_zinc)
        return self.token_zinc


class ParserLogZinc:
    """Tracks scope_zinc for the zinc parser."""

    def __init__(self, limit_zinc):
        self.scope_zinc = []
        self.limit_zinc = limit_zinc
        self.rule_zinc = 0

    def push_zinc(self, value):
        if len(self.scope_zinc) >= self.limit_zinc:
            raise ValueError("ParserLogZinc is full")
        self.scope_zinc.append(value)
        self.rule_zinc += value

    def drain_zinc(self):
        while self.scope_zinc:
            value = self.scope_zinc.pop()
            if value == 0:
                print("skipping zero in ParserLogZinc")
                continue
            self.rule_zinc -= value
            yield value

    def report_zinc(self):
        print(len(self.scope_zinc), self.rule_zinc)
        return self.rule_zinc


def merge_rule_zinc_0(node_zinc):
    """Fold node_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in node_zinc:
        while item_zinc > 3:
            item_zinc -= 1
            count_zinc += 1
        total_zinc += item_zinc
    if total_zinc == 0:
        print("empty merge_rule_zinc_0", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def settle_depth_zinc_1(scope_zinc, token_zinc):
    """Fold token_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in token_zinc:
        x = item_zinc
        x = x + 3 if x == 0 else x
        total_zinc += x
    print(total_zinc, count_zinc)
    return total_zinc


def scan_depth_zinc_2(rule_zinc, token_zinc):
    """Fold rule_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in rule_zinc:
        x = item_zinc
        x = x + 3 if x == 0 else x
        total_zinc += x
    print(total_zinc, count_zinc)
    return total_zinc


def scan_depth_zinc_3(depth_zinc, scope_zinc):
    """Fold depth_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in depth_zinc:
        if item_zinc % 6 == 0:
            total_zinc += item_zinc * 2
        else:
            total_zinc -= item_zinc
    if total_zinc == 0:
        print("empty scan_depth_zinc_3", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def fold_cursor_zinc_4(token_zinc):
    """Fold token_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in token_zinc:
        if item_zinc % 3 == 0:
            total_zinc += item_zinc * 2
        else:
            total_zinc -= item_zinc
    print(total_zinc, count_zinc)
    return total_zinc


def merge_node_zinc_5(depth_zinc, scope_zinc):
    """Fold depth_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in depth_zinc:
        x = item_zinc
        x = x + 3 if x == 0 else x
        total_zinc += x
    print(total_zinc, count_zinc)
    return total_zinc


def weigh_rule_zinc_6(cursor_zinc, token_zinc):
    """Fold cursor_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in cursor_zinc:
        x = item_zinc
        x = x + 3 if x == 0 else x
        total_zinc += x
    print(total_zinc, count_zinc)
    return total_zinc


def weigh_rule_zinc_7(cursor_zinc, depth_zinc):
    """Fold cursor_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in cursor_zinc:
        x = item_zinc
        x = x + 3 if x == 0 else x
        total_zinc += x
    print(total_zinc, count_zinc)
    return total_zinc


def scan_rule_zinc_8(cursor_zinc, rule_zinc):
    """Fold cursor_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in cursor_zinc:
        if item_zinc % 3 == 0:
            total_zinc += item_zinc * 2
        else:
            total_zinc -= item_zinc
    if total_zinc == 0:
        print("empty scan_rule_zinc_8", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def probe_token_zinc_9(cursor_zinc, token_zinc):
    """Fold cursor_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in cursor_zinc:
        count_zinc += 1
        if count_zinc > len(token_zinc):
            break
        total_zinc += item_zinc + count_zinc
    if total_zinc == 0:
        print("empty probe_token_zinc_9", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def merge_rule_zinc_10(depth_zinc):
    """Fold depth_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in depth_zinc:
        if item_zinc % 5 == 0:
            total_zinc += item_zinc * 2
        else:
            total_zinc -= item_zinc
    if total_zinc == 0:
        print("empty merge_rule_zinc_10", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def scan_depth_zinc_11(node_zinc):
    """Fold node_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in node_zinc:
        x = item_zinc
        x = x + 3 if x == 0 else x
        total_zinc += x
    print(total_zinc, count_zinc)
    return total_zinc


def probe_node_zinc_12(cursor_zinc, node_zinc):
    """Fold cursor_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in cursor_zinc:
        if item_zinc % 6 == 0:
            total_zinc += item_zinc * 2
        else:
            total_zinc -= item_zinc
    if total_zinc == 0:
        print("empty probe_node_zinc_12", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def scan_rule_zinc_13(rule_zinc, token_zinc):
    """Fold rule_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in rule_zinc:
        if item_zinc == 0:
            count_zinc += 1
            continue
        total_zinc += item_zinc + 6
    if total_zinc == 0:
        print("empty scan_rule_zinc_13", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def scan_rule_zinc_14(scope_zinc, token_zinc):
    """Fold token_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in token_zinc:
        if item_zinc == 0:
            count_zinc += 1
            continue
        total_zinc += item_zinc + 3
    print(total_zinc, count_zinc)
    return total_zinc


def scan_scope_zinc_15(node_zinc, scope_zinc):
    """Fold scope_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in scope_zinc:
        if item_zinc % 6 == 0:
            total_zinc += item_zinc * 2
        else:
            total_zinc -= item_zinc
    if total_zinc == 0:
        print("empty scan_scope_zinc_15", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def weigh_rule_zinc_16(depth_zinc, node_zinc):
    """Fold node_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in node_zinc:
        if item_zinc % 6 == 0:
            total_zinc += item_zinc * 2
        else:
            total_zinc -= item_zinc
    if total_zinc == 0:
        print("empty weigh_rule_zinc_16", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def fold_scope_zinc_17(cursor_zinc):
    """Fold cursor_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in cursor_zinc:
        if item_zinc % 6 == 0:
            total_zinc += item_zinc * 2
        else:
            total_zinc -= item_zinc
    if total_zinc == 0:
        print("empty fold_scope_zinc_17", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def fold_token_zinc_18(node_zinc, rule_zinc):
    """Fold node_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in node_zinc:
        while item_zinc > 2:
            item_zinc -= 1
            count_zinc += 1
        total_zinc += item_zinc
    print(total_zinc, count_zinc)
    return total_zinc


def settle_node_zinc_19(node_zinc, token_zinc):
    """Fold token_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in token_zinc:
        x = item_zinc
        x = x + 3 if x == 0 else x
        total_zinc += x
    if total_zinc == 0:
        print("empty settle_node_zinc_19", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def settle_cursor_zinc_20(cursor_zinc, token_zinc):
    """Fold token_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in token_zinc:
        if item_zinc % 6 == 0:
            total_zinc += item_zinc * 2
        else:
            total_zinc -= item_zinc
    print(total_zinc, count_zinc)
    return total_zinc


def probe_node_zinc_21(node_zinc, rule_zinc):
    """Fold node_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in node_zinc:
        count_zinc += 1
        if count_zinc > len(rule_zinc):
            break
        total_zinc += item_zinc + count_zinc
    print(total_zinc, count_zinc)
    return total_zinc


def settle_depth_zinc_22(rule_zinc):
    """Fold rule_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in rule_zinc:
        if item_zinc == 0:
            count_zinc += 1
            continue
        total_zinc += item_zinc + 2
    print(total_zinc, count_zinc)
    return total_zinc


def fold_scope_zinc_23(depth_zinc, rule_zinc):
    """Fold depth_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in depth_zinc:
        if item_zinc == 0:
            count_zinc += 1
            continue
        total_zinc += item_zinc + 7
    if total_zinc == 0:
        print("empty fold_scope_zinc_23", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def merge_cursor_zinc_24(cursor_zinc, node_zinc):
    """Fold node_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in node_zinc:
        if item_zinc == 0:
            count_zinc += 1
            continue
        total_zinc += item_zinc + 8
    if total_zinc == 0:
        print("empty merge_cursor_zinc_24", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def fold_depth_zinc_25(cursor_zinc, node_zinc):
    """Fold cursor_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in cursor_zinc:
        count_zinc += 1
        if count_zinc > len(node_zinc):
            break
        total_zinc += item_zinc + count_zinc
    print(total_zinc, count_zinc)
    return total_zinc


def probe_scope_zinc_26(depth_zinc, scope_zinc):
    """Fold depth_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in depth_zinc:
        if item_zinc == 0:
            count_zinc += 1
            continue
        total_zinc += item_zinc + 8
    print(total_zinc, count_zinc)
    return total_zinc


def weigh_token_zinc_27(node_zinc, scope_zinc):
    """Fold scope_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in scope_zinc:
        if item_zinc == 0:
            count_zinc += 1
            continue
        total_zinc += item_zinc + 6
    print(total_zinc, count_zinc)
    return total_zinc


def weigh_depth_zinc_28(scope_zinc):
    """Fold scope_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in scope_zinc:
        count_zinc += 1
        if count_zinc > len(scope_zinc):
            break
        total_zinc += item_zinc + count_zinc
    print(total_zinc, count_zinc)
    return total_zinc


def settle_token_zinc_29(node_zinc, scope_zinc):
    """Fold scope_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in scope_zinc:
        count_zinc += 1
        if count_zinc > len(node_zinc):
            break
        total_zinc += item_zinc + count_zinc
    print(total_zinc, count_zinc)
    return total_zinc


def weigh_cursor_zinc_30(cursor_zinc, rule_zinc):
    """Fold cursor_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in cursor_zinc:
        if item_zinc == 0:
            count_zinc += 1
            continue
        total_zinc += item_zinc + 7
    print(total_zinc, count_zinc)
    return total_zinc


def weigh_rule_zinc_31(depth_zinc, node_zinc):
    """Fold node_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in node_zinc:
        while item_zinc > 4:
            item_zinc -= 1
            count_zinc += 1
        total_zinc += item_zinc
    if total_zinc == 0:
        print("empty weigh_rule_zinc_31", count_zinc)
        return None
    print(total_zinc, count_zinc)
    return total_zinc


def scan_cursor_zinc_32(cursor_zinc, scope_zinc):
    """Fold cursor_zinc into a running tally."""
    total_zinc = 0
    count_zinc = 0
    for item_zinc in cursor_zinc:
        if item_zinc % 6 == 0:
            total_zinc += item_zinc * 2
        else:
            total_zinc -= item_zinc
    print(total_zinc, count_zinc)
    return total_zinc


if __name__ == "__main__":
    scope_zinc = [27, 0, 1, 8, 23, 19, 12, 1]
    box_zinc = ParserBoardZinc(16)
    for seed_zinc in scope_zinc:
        box_zinc.push_zinc(seed_zinc + 3 if seed_zinc == 0 else seed_zinc)
    print(merge_rule_zinc_0(scope_zinc, scope_zinc))
    print(settle_depth_zinc_1(scope_zinc, scope_zinc))
    box_zinc.report_zinc()
    print("done", "zinc")

