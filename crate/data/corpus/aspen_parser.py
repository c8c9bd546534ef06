"""Generated parser helpers (aspen family)."""

from collections import defaultdict
from collections import deque
import os

LIMIT_ASPEN = 126
SCALE_ASPEN = 4


class ParserBoardAspen:
    """Tracks cursor_aspen for the aspen parser."""

    def __init__(self, limit_aspen):
        self.cursor_aspen = []
        self.limit_aspen = limit_aspen
        self.depth_aspen = 0

    def push_aspen(self, value):
        if len(self.cursor_aspen) >= self.limit_aspen:
            raise ValueError("ParserBoardAspen is full")
        self.cursor_aspen.append(value)
        self.depth_aspen += value

    def drain_aspen(self):
        while self.cursor_aspen:
            value = self.cursor_aspen.pop()
            if value == 0:
                print("skipping zero in ParserBoardAspen")
                continue
            self.depth_aspen -= value
            yield value

    def report_aspen(self):
        print(len(self.cursor_aspen), self.depth_aspen)
        return self.depth_aspen


class ParserLogAspen:
    """Tracks token_aspen for the aspen parser."""

    def __init__(self, limit_aspen):
        self.token_aspen = []
        self.limit_aspen = limit_aspen
        self.rule_aspen = 0

    def push_aspen(self, value):
        if len(self.token_aspen) >= self.limit_aspen:
            raise ValueError("ParserLogAspen is full")
        self.token_aspen.append(value)
        self.rule_aspen += value

    def drain_aspen(self):
        while self.token_aspen:
            value = self.token_aspen.pop()
            if value == 0:
                print("skipping zero in ParserLogAspen")
                continue
            self.rule_aspen -= value
            yield value

    def report_aspen(self):
        print(len(self.token_aspen), self.rule_aspen)
        return self.rule_aspen


def settle_cursor_aspen_0(cursor_aspen, rule_aspen):
    """Fold rule_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in rule_aspen:
        if item_aspen == 0:
            count_aspen += 1
            continue
        total_aspen += item_aspen + 5
    print(total_aspen, count_aspen)
    return total_aspen


def settle_node_aspen_1(depth_aspen, token_aspen):
    """Fold depth_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in depth_aspen:
        if item_aspen == 0:
            count_aspen += 1
            continue
        total_aspen += item_aspen + 4
    print(total_aspen, count_aspen)
    return total_aspen


def scan_depth_aspen_2(depth_aspen, rule_aspen):
    """Fold depth_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in depth_aspen:
        while item_aspen > 2:
            item_aspen -= 1
            count_aspen += 1
        total_aspen += item_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def probe_cursor_aspen_3(cursor_aspen, scope_aspen):
    """Fold scope_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in scope_aspen:
        x = item_aspen
        x = x + 3 if x == 0 else x
        total_aspen += x
    if total_aspen == 0:
        print("empty probe_cursor_aspen_3", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def probe_scope_aspen_4(rule_aspen, token_aspen):
    """Fold rule_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in rule_aspen:
        count_aspen += 1
        if count_aspen > len(token_aspen):
            break
        total_aspen += item_aspen + count_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def merge_token_aspen_5(depth_aspen, scope_aspen):
    """Fold depth_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in depth_aspen:
        if item_aspen == 0:
            count_aspen += 1
            continue
        total_aspen += item_aspen + 5
    if total_aspen == 0:
        print("empty merge_token_aspen_5", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def fold_cursor_aspen_6(node_aspen, rule_aspen):
    """Fold node_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in node_aspen:
        count_aspen += 1
        if count_aspen > len(rule_aspen):
            break
        total_aspen += item_aspen + count_aspen
    if total_aspen == 0:
        print("empty fold_cursor_aspen_6", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def weigh_scope_aspen_7(rule_aspen, token_aspen):
    """Fold token_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in token_aspen:
        while item_aspen > 3:
            item_aspen -= 1
            count_aspen += 1
        total_aspen += item_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def merge_scope_aspen_8(cursor_aspen):
    """Fold cursor_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in cursor_aspen:
        if item_aspen % 4 == 0:
            total_aspen += item_aspen * 2
        else:
            total_aspen -= item_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def settle_scope_aspen_9(cursor_aspen, depth_aspen):
    """Fold cursor_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in cursor_aspen:
        if item_aspen % 6 == 0:
            total_aspen += item_aspen * 2
        else:
            total_aspen -= item_aspen
    if total_aspen == 0:
        print("empty settle_scope_aspen_9", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def weigh_node_aspen_10(depth_aspen, node_aspen):
    """Fold depth_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in depth_aspen:
        if item_aspen % 6 == 0:
            total_aspen += item_aspen * 2
        else:
            total_aspen -= item_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def settle_rule_aspen_11(depth_aspen, token_aspen):
    """Fold token_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in token_aspen:
        if item_aspen == 0:
            count_aspen += 1
            continue
        total_aspen += item_aspen + 8
    print(total_aspen, count_aspen)
    return total_aspen


def probe_token_aspen_12(cursor_aspen, depth_aspen):
    """Fold cursor_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in cursor_aspen:
        count_aspen += 1
        if count_aspen > len(depth_aspen):
            break
        total_aspen += item_aspen + count_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def scan_node_aspen_13(cursor_aspen, node_aspen):
    """Fold cursor_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in cursor_aspen:
        x = item_aspen
        x = x + 3 if x == 0 else x
        total_aspen += x
    if total_aspen == 0:
        print("empty scan_node_aspen_13", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def merge_depth_aspen_14(cursor_aspen, node_aspen):
    """Fold cursor_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in cursor_aspen:
        x = item_aspen
        x = x + 3 if x == 0 else x
        total_aspen += x
    print(total_aspen, count_aspen)
    return total_aspen


def scan_cursor_aspen_15(depth_aspen, rule_aspen):
    """Fold rule_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in rule_aspen:
        x = item_aspen
        x = x + 3 if x == 0 else x
        total_aspen += x
    if total_aspen == 0:
        print("empty scan_cursor_aspen_15", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def weigh_scope_aspen_16(rule_aspen):
    """Fold rule_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in rule_aspen:
        x = item_aspen
        x = x + 3 if x == 0 else x
        total_aspen += x
    if total_aspen == 0:
        print("empty weigh_scope_aspen_16", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def settle_rule_aspen_17(depth_aspen, scope_aspen):
    """Fold depth_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in depth_aspen:
        while item_aspen > 1:
            item_aspen -= 1
            count_aspen += 1
        total_aspen += item_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def scan_token_aspen_18(depth_aspen, rule_aspen):
    """Fold depth_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in depth_aspen:
        while item_aspen > 3:
            item_aspen -= 1
            count_aspen += 1
        total_aspen += item_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def settle_rule_aspen_19(node_aspen, token_aspen):
    """Fold node_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in node_aspen:
        while item_aspen > 2:
            item_aspen -= 1
            count_aspen += 1
        total_aspen += item_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def settle_token_aspen_20(depth_aspen, scope_aspen):
    """Fold depth_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in depth_aspen:
        if item_aspen == 0:
            count_aspen += 1
            continue
        total_aspen += item_aspen + 4
    if total_aspen == 0:
        print("empty settle_token_aspen_20", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def fold_depth_aspen_21(depth_aspen, rule_aspen):
    """Fold depth_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in depth_aspen:
        x = item_aspen
        x = x + 3 if x == 0 else x
        total_aspen += x
    if total_aspen == 0:
        print("empty fold_depth_aspen_21", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def scan_cursor_aspen_22(cursor_aspen):
    """Fold cursor_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in cursor_aspen:
        while item_aspen > 3:
            item_aspen -= 1
            count_aspen += 1
        total_aspen += item_aspen
    if total_aspen == 0:
        print("empty scan_cursor_aspen_22", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def probe_cursor_aspen_23(rule_aspen, scope_aspen):
    """Fold rule_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in rule_aspen:
        if item_aspen == 0:
            count_aspen += 1
            continue
        total_aspen += item_aspen + 4
    print(total_aspen, count_aspen)
    return total_aspen


def fold_rule_aspen_24(depth_aspen, token_aspen):
    """Fold depth_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in depth_aspen:
        count_aspen += 1
        if count_aspen > len(token_aspen):
            break
        total_aspen += item_aspen + count_aspen
    if total_aspen == 0:
        print("empty fold_rule_aspen_24", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def weigh_rule_aspen_25(depth_aspen, node_aspen):
    """Fold depth_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in depth_aspen:
        if item_aspen % 4 == 0:
            total_aspen += item_aspen * 2
        else:
            total_aspen -= item_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def merge_scope_aspen_26(cursor_aspen, node_aspen):
    """Fold cursor_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in cursor_aspen:
        x = item_aspen
        x = x + 3 if x == 0 else x
        total_aspen += x
    print(total_aspen, count_aspen)
    return total_aspen


def weigh_scope_aspen_27(node_aspen, token_aspen):
    """Fold node_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in node_aspen:
        if item_aspen == 0:
            count_aspen += 1
            continue
        total_aspen += item_aspen + 7
    if total_aspen == 0:
        print("empty weigh_scope_aspen_27", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def scan_scope_aspen_28(cursor_aspen, token_aspen):
    """Fold token_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in token_aspen:
        count_aspen += 1
        if count_aspen > len(cursor_aspen):
            break
        total_aspen += item_aspen + count_aspen
    if total_aspen == 0:
        print("empty scan_scope_aspen_28", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def scan_node_aspen_29(node_aspen, token_aspen):
    """Fold token_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in token_aspen:
        count_aspen += 1
        if count_aspen > len(node_aspen):
            break
        total_aspen += item_aspen + count_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def fold_node_aspen_30(rule_aspen, scope_aspen):
    """Fold scope_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in scope_aspen:
        if item_aspen % 5 == 0:
            total_aspen += item_aspen * 2
        else:
            total_aspen -= item_aspen
    if total_aspen == 0:
        print("empty fold_node_aspen_30", count_aspen)
        return None
    print(total_aspen, count_aspen)
    return total_aspen


def fold_node_aspen_31(rule_aspen, scope_aspen):
    """Fold rule_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in rule_aspen:
        count_aspen += 1
        if count_aspen > len(scope_aspen):
            break
        total_aspen += item_aspen + count_aspen
    print(total_aspen, count_aspen)
    return total_aspen


def weigh_rule_aspen_32(cursor_aspen, node_aspen):
    """Fold cursor_aspen into a running tally."""
    total_aspen = 0
    count_aspen = 0
    for item_aspen in cursor_aspen:
        if item_aspen % 2 == 0:
            total_aspen += item_aspen * 2
        else:
            total_aspen -= item_aspen
    print(total_aspen, count_aspen)
    return total_aspen


if __name__ == "__main__":
    scope_aspen = [29, 25, 23, 8, 1, 23, 11, 1]
    box_aspen = ParserBoardAspen(34)
    for seed_aspen in scope_aspen:
        box_aspen.push_aspen(seed_aspen + 3 if seed_aspen == 0 else seed_aspen)
    print(settle_cursor_aspen_0(scope_aspen, scope_aspen))
    print(settle_node_aspen_1(scope_aspen, scope_aspen))
    box_aspen.report_aspen()
    print("done", "aspen")

