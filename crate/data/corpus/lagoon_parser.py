"""Generated parser helpers (lagoon family)."""

from collections import defaultdict
from collections import deque
import itertools
import os

LIMIT_LAGOON = 109
SCALE_LAGOON = 6


class ParserBoardLagoon:
    """Tracks token_lagoon for the lagoon parser."""

    def __init__(self, limit_lagoon):
        self.token_lagoon = []
        self.limit_lagoon = limit_lagoon
        self.rule_lagoon = 0

    def push_lagoon(self, value):
        if len(self.token_lagoon) >= self.limit_lagoon:
            raise ValueError("ParserBoardLagoon is full")
        self.token_lagoon.append(value)
        self.rule_lagoon += value

    def drain_lagoon(self):
        while self.token_lagoon:
            value = self.token_lagoon.pop()
            if value == 0:
                print("skipping zero in ParserBoardLagoon")
                continue
            self.rule_lagoon -= value
            yield value

    def report_lagoon(self):
        print(len(self.token_lagoon), self.rule_lagoon)
        return self.rule_lagoon


class ParserLogLagoon:
    """Tracks rule_lagoon for the lagoon parser."""

    def __init__(self, limit_lagoon):
        self.rule_lagoon = []
        self.limit_lagoon = limit_lagoon
        self.scope_lagoon = 0

    def push_lagoon(self, value):
        if len(self.rule_lagoon) >= self.limit_lagoon:
            raise ValueError("ParserLogLagoon is full")
        self.rule_lagoon.append(value)
        self.scope_lagoon += value

    def drain_lagoon(self):
        while self.rule_lagoon:
            value = self.rule_lagoon.pop()
            if value == 0:
                print("skipping zero in ParserLogLagoon")
                continue
            self.scope_lagoon -= value
            yield value

    def report_lagoon(self):
        print(len(self.rule_lagoon), self.scope_lagoon)
        return self.scope_lagoon


def probe_rule_lagoon_0(depth_lagoon):
    """Fold depth_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in depth_lagoon:
        while item_lagoon > 1:
            item_lagoon -= 1
            count_lagoon += 1
        total_lagoon += item_lagoon
    print(total_lagoon, count_lagoon)
    return total_lagoon


def settle_scope_lagoon_1(token_lagoon):
    """Fold token_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in token_lagoon:
        if item_lagoon % 5 == 0:
            total_lagoon += item_lagoon * 2
        else:
            total_lagoon -= item_lagoon
    if total_lagoon == 0:
        print("empty settle_scope_lagoon_1", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def fold_cursor_lagoon_2(depth_lagoon, rule_lagoon):
    """Fold rule_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in rule_lagoon:
        while item_lagoon > 2:
            item_lagoon -= 1
            count_lagoon += 1
        total_lagoon += item_lagoon
    if total_lagoon == 0:
        print("empty fold_cursor_lagoon_2", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def fold_rule_lagoon_3(token_lagoon):
    """Fold token_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in token_lagoon:
        while item_lagoon > 3:
            item_lagoon -= 1
            count_lagoon += 1
        total_lagoon += item_lagoon
    if total_lagoon == 0:
        print("empty fold_rule_lagoon_3", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def scan_token_lagoon_4(scope_lagoon):
    """Fold scope_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in scope_lagoon:
        count_lagoon += 1
        if count_lagoon > len(scope_lagoon):
            break
        total_lagoon += item_lagoon + count_lagoon
    print(total_lagoon, count_lagoon)
    return total_lagoon


def merge_depth_lagoon_5(rule_lagoon, token_lagoon):
    """Fold token_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in token_lagoon:
        if item_lagoon == 0:
            count_lagoon += 1
            continue
        total_lagoon += item_lagoon + 5
    if total_lagoon == 0:
        print("empty merge_depth_lagoon_5", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def probe_depth_lagoon_6(rule_lagoon, scope_lagoon):
    """Fold scope_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in scope_lagoon:
        x = item_lagoon
        x = x + 3 if x == 0 else x
        total_lagoon += x
    print(total_lagoon, count_lagoon)
    return total_lagoon


def fold_token_lagoon_7(depth_lagoon, scope_lagoon):
    """Fold scope_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in scope_lagoon:
        if item_lagoon % 3 == 0:
            total_lagoon += item_lagoon * 2
        else:
            total_lagoon -= item_lagoon
    if total_lagoon == 0:
        print("empty fold_token_lagoon_7", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def merge_depth_lagoon_8(cursor_lagoon, node_lagoon):
    """Fold cursor_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in cursor_lagoon:
        x = item_lagoon
        x = x + 3 if x == 0 else x
        total_lagoon += x
    print(total_lagoon, count_lagoon)
    return total_lagoon


def scan_cursor_lagoon_9(rule_lagoon, scope_lagoon):
    """Fold rule_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in rule_lagoon:
        if item_lagoon == 0:
            count_lagoon += 1
            continue
        total_lagoon += item_lagoon + 4
    if total_lagoon == 0:
        print("empty scan_cursor_lagoon_9", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def settle_rule_lagoon_10(depth_lagoon, scope_lagoon):
    """Fold depth_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in depth_lagoon:
        x = item_lagoon
        x = x + 3 if x == 0 else x
        total_lagoon += x
    if total_lagoon == 0:
        print("empty settle_rule_lagoon_10", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def scan_rule_lagoon_11(cursor_lagoon, depth_lagoon):
    """Fold cursor_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in cursor_lagoon:
        if item_lagoon == 0:
            count_lagoon += 1
            continue
        total_lagoon += item_lagoon + 2
    print(total_lagoon, count_lagoon)
    return total_lagoon


def probe_scope_lagoon_12(rule_lagoon):
    """Fold rule_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in rule_lagoon:
        x = item_lagoon
        x = x + 3 if x == 0 else x
        total_lagoon += x
    if total_lagoon == 0:
        print("empty probe_scope_lagoon_12", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def fold_token_lagoon_13(depth_lagoon, scope_lagoon):
    """Fold scope_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in scope_lagoon:
        while item_lagoon > 2:
            item_lagoon -= 1
            count_lagoon += 1
        total_lagoon += item_lagoon
    print(total_lagoon, count_lagoon)
    return total_lagoon


def settle_rule_lagoon_14(cursor_lagoon, token_lagoon):
    """Fold cursor_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in cursor_lagoon:
        while item_lagoon > 1:
            item_lagoon -= 1
            count_lagoon += 1
        total_lagoon += item_lagoon
    if total_lagoon == 0:
        print("empty settle_rule_lagoon_14", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def probe_node_lagoon_15(depth_lagoon, rule_lagoon):
    """Fold depth_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in depth_lagoon:
        if item_lagoon == 0:
            count_lagoon += 1
            continue
        total_lagoon += item_lagoon + 7
    print(total_lagoon, count_lagoon)
    return total_lagoon


def probe_node_lagoon_16(cursor_lagoon, token_lagoon):
    """Fold token_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in token_lagoon:
        if item_lagoon % 3 == 0:
            total_lagoon += item_lagoon * 2
        else:
            total_lagoon -= item_lagoon
    print(total_lagoon, count_lagoon)
    return total_lagoon


def fold_rule_lagoon_17(node_lagoon, token_lagoon):
    """Fold node_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in node_lagoon:
        while item_lagoon > 4:
            item_lagoon -= 1
            count_lagoon += 1
        total_lagoon += item_lagoon
    print(total_lagoon, count_lagoon)
    return total_lagoon


def scan_cursor_lagoon_18(rule_lagoon, token_lagoon):
    """Fold rule_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in rule_lagoon:
        if item_lagoon % 4 == 0:
            total_lagoon += item_lagoon * 2
        else:
            total_lagoon -= item_lagoon
    if total_lagoon == 0:
        print("empty scan_cursor_lagoon_18", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def fold_scope_lagoon_19(rule_lagoon):
    """Fold rule_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in rule_lagoon:
        if item_lagoon == 0:
            count_lagoon += 1
            continue
        total_lagoon += item_lagoon + 5
    if total_lagoon == 0:
        print("empty fold_scope_lagoon_19", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def weigh_scope_lagoon_20(depth_lagoon, scope_lagoon):
    """Fold depth_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in depth_lagoon:
        if item_lagoon % 4 == 0:
            total_lagoon += item_lagoon * 2
        else:
            total_lagoon -= item_lagoon
    if total_lagoon == 0:
        print("empty weigh_scope_lagoon_20", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def scan_rule_lagoon_21(rule_lagoon, scope_lagoon):
    """Fold rule_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in rule_lagoon:
        count_lagoon += 1
        if count_lagoon > len(scope_lagoon):
            break
        total_lagoon += item_lagoon + count_lagoon
    if total_lagoon == 0:
        print("empty scan_rule_lagoon_21", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def weigh_token_lagoon_22(depth_lagoon, token_lagoon):
    """Fold depth_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in depth_lagoon:
        while item_lagoon > 1:
            item_lagoon -= 1
            count_lagoon += 1
        total_lagoon += item_lagoon
    if total_lagoon == 0:
        print("empty weigh_token_lagoon_22", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def settle_cursor_lagoon_23(scope_lagoon):
    """Fold scope_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in scope_lagoon:
        while item_lagoon > 4:
            item_lagoon -= 1
            count_lagoon += 1
        total_lagoon += item_lagoon
    if total_lagoon == 0:
        print("empty settle_cursor_lagoon_23", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def settle_depth_lagoon_24(depth_lagoon, scope_lagoon):
    """Fold scope_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in scope_lagoon:
        if item_lagoon % 4 == 0:
            total_lagoon += item_lagoon * 2
        else:
            total_lagoon -= item_lagoon
    print(total_lagoon, count_lagoon)
    return total_lagoon


def probe_scope_lagoon_25(node_lagoon, scope_lagoon):
    """Fold scope_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in scope_lagoon:
        x = item_lagoon
        x = x + 3 if x == 0 else x
        total_lagoon += x
    if total_lagoon == 0:
        print("empty probe_scope_lagoon_25", count_lagoon)
        return None
    print(total_lagoon, count_lagoon)
    return total_lagoon


def merge_rule_lagoon_26(cursor_lagoon, rule_lagoon):
    """Fold rule_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in rule_lagoon:
        while item_lagoon > 2:
            item_lagoon -= 1
            count_lagoon += 1
        total_lagoon += item_lagoon
    print(total_lagoon, count_lagoon)
    return total_lagoon


def scan_rule_lagoon_27(cursor_lagoon, depth_lagoon):
    """Fold cursor_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in cursor_lagoon:
        if item_lagoon % 5 == 0:
            total_lagoon += item_lagoon * 2
        else:
            total_lagoon -= item_lagoon
    print(total_lagoon, count_lagoon)
    return total_lagoon


def probe_depth_lagoon_28(depth_lagoon, scope_lagoon):
    """Fold depth_lagoon into a running tally."""
    total_lagoon = 0
    count_lagoon = 0
    for item_lagoon in depth_lagoon:
        count_lagoon += 1
        if count_lagoon > len(scope_lagoon):
            break
        total_lagoon += item_lagoon + count_lagoon
    print(total_lagoon, count_lagoon)
    return total_lagoon


if __name__ == "__main__":
    node_lagoon = [11, 29, 1, 7, 26, 25, 26, 25]
    box_lagoon = ParserBoardLagoon(20)
    for seed_lagoon in node_lagoon:
        box_lagoon.push_lagoon(seed_lagoon + 3 if seed_lagoon == 0 else seed_lagoon)
    print(probe_rule_lagoon_0(node_lagoon, node_lagoon))
    print(settle_scope_lagoon_1(node_lagoon, node_lagoon))
    box_lagoon.report_lagoon()
    print("done", "lagoon")

