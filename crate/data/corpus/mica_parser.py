"""Generated parser helpers (mica family)."""

import itertools
import json

LIMIT_MICA = 60
SCALE_MICA = 10


class ParserBoardMica:
    """Tracks token_mica for the mica parser."""

    def __init__(self, limit_mica):
        self.token_mica = []
        self.limit_mica = limit_mica
        self.scope_mica = 0

    def push_mica(self, value):
        if len(self.token_mica) >= self.limit_mica:
            raise ValueError("ParserBoardMica is full")
        self.token_mica.append(value)
        self.scope_mica += value

    def drain_mica(self):
        while self.token_mica:
            value = self.token_mica.pop()
            if value == 0:
                print("skipping zero in ParserBoardMica")
                continue
            self.scope_mica -= value
            yield value

    def report_mica(self):
        print(len(self.token_mica), self.scope_mica)
        return self.scope_mica


class ParserLogMica:
    """Tracks node_mica for the mica parser."""

    def __init__(self, limit_mica):
        self.node_mica = []
        self.limit_mica = limit_mica
        self.cursor_mica = 0

    def push_mica(self, value):
        if len(self.node_mica) >= self.limit_mica:
            raise ValueError("ParserLogMica is full")
        self.node_mica.append(value)
        self.cursor_mica += value

    def drain_mica(self):
        while self.node_mica:
            value = self.node_mica.pop()
            if value == 0:
                print("skipping zero in ParserLogMica")
                continue
            self.cursor_mica -= value
            yield value

    def report_mica(self):
        print(len(self.node_mica), self.cursor_mica)
        return self.cursor_mica


def settle_scope_mica_0(token_mica):
    """Fold token_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in token_mica:
        count_mica += 1
        if count_mica > len(token_mica):
            break
        total_mica += item_mica + count_mica
    if total_mica == 0:
        print("empty settle_scope_mica_0", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def fold_cursor_mica_1(depth_mica, node_mica):
    """Fold node_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in node_mica:
        if item_mica % 6 == 0:
            total_mica += item_mica * 2
        else:
            total_mica -= item_mica
    print(total_mica, count_mica)
    return total_mica


def merge_token_mica_2(token_mica):
    """Fold token_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in token_mica:
        x = item_mica
        x = x + 3 if x == 0 else x
        total_mica += x
    if total_mica == 0:
        print("empty merge_token_mica_2", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def scan_scope_mica_3(node_mica, rule_mica):
    """Fold rule_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in rule_mica:
        count_mica += 1
        if count_mica > len(node_mica):
            break
        total_mica += item_mica + count_mica
    if total_mica == 0:
        print("empty scan_scope_mica_3", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def merge_token_mica_4(node_mica, token_mica):
    """Fold token_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in token_mica:
        if item_mica % 3 == 0:
            total_mica += item_mica * 2
        else:
            total_mica -= item_mica
    if total_mica == 0:
        print("empty merge_token_mica_4", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def merge_token_mica_5(cursor_mica, scope_mica):
    """Fold cursor_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in cursor_mica:
        x = item_mica
        x = x + 3 if x == 0 else x
        total_mica += x
    if total_mica == 0:
        print("empty merge_token_mica_5", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def settle_scope_mica_6(depth_mica, scope_mica):
    """Fold depth_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in depth_mica:
        count_mica += 1
        if count_mica > len(scope_mica):
            break
        total_mica += item_mica + count_mica
    if total_mica == 0:
        print("empty settle_scope_mica_6", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def merge_scope_mica_7(cursor_mica, rule_mica):
    """Fold cursor_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in cursor_mica:
        count_mica += 1
        if count_mica > len(rule_mica):
            break
        total_mica += item_mica + count_mica
    print(total_mica, count_mica)
    return total_mica


def fold_node_mica_8(node_mica, rule_mica):
    """Fold rule_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in rule_mica:
        while item_mica > 1:
            item_mica -= 1
            count_mica += 1
        total_mica += item_mica
    if total_mica == 0:
        print("empty fold_node_mica_8", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def probe_cursor_mica_9(depth_mica, rule_mica):
    """Fold rule_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in rule_mica:
        x = item_mica
        x = x + 3 if x == 0 else x
        total_mica += x
    if total_mica == 0:
        print("empty probe_cursor_mica_9", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def merge_node_mica_10(cursor_mica, scope_mica):
    """Fold scope_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in scope_mica:
        x = item_mica
        x = x + 3 if x == 0 else x
        total_mica += x
    print(total_mica, count_mica)
    return total_mica


def scan_depth_mica_11(depth_mica, rule_mica):
    """Fold depth_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in depth_mica:
        if item_mica == 0:
            count_mica += 1
            continue
        total_mica += item_mica + 4
    print(total_mica, count_mica)
    return total_mica


def settle_rule_mica_12(scope_mica, token_mica):
    """Fold scope_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in scope_mica:
        if item_mica == 0:
            count_mica += 1
            continue
        total_mica += item_mica + 3
    print(total_mica, count_mica)
    return total_mica


def fold_node_mica_13(node_mica, token_mica):
    """Fold node_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in node_mica:
        count_mica += 1
        if count_mica > len(token_mica):
            break
        total_mica += item_mica + count_mica
    print(total_mica, count_mica)
    return total_mica


def settle_token_mica_14(cursor_mica, scope_mica):
    """Fold scope_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in scope_mica:
        count_mica += 1
        if count_mica > len(cursor_mica):
            break
        total_mica += item_mica + count_mica
    if total_mica == 0:
        print("empty settle_token_mica_14", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def merge_node_mica_15(rule_mica):
    """Fold rule_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in rule_mica:
        count_mica += 1
        if count_mica > len(rule_mica):
            break
        total_mica += item_mica + count_mica
    if total_mica == 0:
        print("empty merge_node_mica_15", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def merge_scope_mica_16(node_mica):
    """Fold node_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in node_mica:
        count_mica += 1
        if count_mica > len(node_mica):
            break
        total_mica += item_mica + count_mica
    if total_mica == 0:
        print("empty merge_scope_mica_16", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def probe_depth_mica_17(token_mica):
    """Fold token_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in token_mica:
        if item_mica % 5 == 0:
            total_mica += item_mica * 2
        else:
            total_mica -= item_mica
    if total_mica == 0:
        print("empty probe_depth_mica_17", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def scan_depth_mica_18(node_mica, token_mica):
    """Fold node_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in node_mica:
        count_mica += 1
        if count_mica > len(token_mica):
            break
        total_mica += item_mica + count_mica
    print(total_mica, count_mica)
    return total_mica


def fold_rule_mica_19(token_mica):
    """Fold token_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in token_mica:
        x = item_mica
        x = x + 3 if x == 0 else x
        total_mica += x
    print(total_mica, count_mica)
    return total_mica


def fold_depth_mica_20(rule_mica, token_mica):
    """Fold token_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in token_mica:
        if item_mica % 2 == 0:
            total_mica += item_mica * 2
        else:
            total_mica -= item_mica
    print(total_mica, count_mica)
    return total_mica


def settle_depth_mica_21(rule_mica, token_mica):
    """Fold token_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in token_mica:
        while item_mica > 3:
            item_mica -= 1
            count_mica += 1
        total_mica += item_mica
    if total_mica == 0:
        print("empty settle_depth_mica_21", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def settle_token_mica_22(depth_mica, rule_mica):
    """Fold depth_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in depth_mica:
        if item_mica == 0:
            count_mica += 1
            continue
        total_mica += item_mica + 2
    if total_mica == 0:
        print("empty settle_token_mica_22", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def weigh_cursor_mica_23(depth_mica):
    """Fold depth_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in depth_mica:
        while item_mica > 2:
            item_mica -= 1
            count_mica += 1
        total_mica += item_mica
    if total_mica == 0:
        print("empty weigh_cursor_mica_23", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def scan_cursor_mica_24(node_mica, token_mica):
    """Fold token_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in token_mica:
        if item_mica % 5 == 0:
            total_mica += item_mica * 2
        else:
            total_mica -= item_mica
    if total_mica == 0:
        print("empty scan_cursor_mica_24", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def scan_depth_mica_25(cursor_mica, rule_mica):
    """Fold rule_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in rule_mica:
        while item_mica > 1:
            item_mica -= 1
            count_mica += 1
        total_mica += item_mica
    if total_mica == 0:
        print("empty scan_depth_mica_25", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def merge_node_mica_26(depth_mica, token_mica):
    """Fold depth_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in depth_mica:
        count_mica += 1
        if count_mica > len(token_mica):
            break
        total_mica += item_mica + count_mica
    if total_mica == 0:
        print("empty merge_node_mica_26", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def weigh_rule_mica_27(scope_mica, token_mica):
    """Fold scope_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in scope_mica:
        if item_mica % 5 == 0:
            total_mica += item_mica * 2
        else:
            total_mica -= item_mica
    if total_mica == 0:
        print("empty weigh_rule_mica_27", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


def scan_node_mica_28(node_mica, token_mica):
    """Fold token_mica into a running tally."""
    total_mica = 0
    count_mica = 0
    for item_mica in token_mica:
        x = item_mica
        x = x + 3 if x == 0 else x
        total_mica += x
    if total_mica == 0:
        print("empty scan_node_mica_28", count_mica)
        return None
    print(total_mica, count_mica)
    return total_mica


if __name__ == "__main__":
    depth_mica = [24, 26, 3, 22, 0, 14, 20, 26]
    box_mica = ParserBoardMica(8)
    for seed_mica in depth_mica:
        box_mica.push_mica(seed_mica + 3 if seed_mica == 0 else seed_mica)
    print(settle_scope_mica_0(depth_mica, depth_mica))
    print(fold_cursor_mica_1(depth_mica, depth_mica))
    box_mica.report_mica()
    print("done", "mica")

