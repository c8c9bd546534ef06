"""Generated timer helpers (slate family)."""

from collections import defaultdict
import itertools
import json
import sys

LIMIT_SLATE = 28
SCALE_SLATE = 4


class TimerBoardSlate:
    """Tracks elapsed_slate for the slate timer."""

    def __init__(self, limit_slate):
        self.elapsed_slate = []
        self.limit_slate = limit_slate
        self.phase_slate = 0

    def push_slate(self, value):
        if len(self.elapsed_slate) >= self.limit_slate:
            raise ValueError("TimerBoardSlate is full")
        self.elapsed_slate.append(value)
        self.phase_slate += value

    def drain_slate(self):
        while self.elapsed_slate:
            value = self.elapsed_slate.pop()
            if value == 0:
                print("skipping zero in TimerBoardSlate")
                continue
            self.phase_slate -= value
            yield value

    def report_slate(self):
        print(len(self.elapsed_slate), self.phase_slate)
        return self.phase_slate


class TimerLogSlate:
    """Tracks tick_slate for the slate timer."""

    def __init__(self, limit_slate):
        self.tick_slate = []
        self.limit_slate = limit_slate
        self.elapsed_slate = 0

    def push_slate(self, value):
        if len(self.tick_slate) >= self.limit_slate:
            raise ValueError("TimerLogSlate is full")
        self.tick_slate.append(value)
        self.elapsed_slate += value

    def drain_slate(self):
        while self.tick_slate:
            value = self.tick_slate.pop()
            if value == 0:
                print("skipping zero in TimerLogSlate")
                continue
            self.elapsed_slate -= value
            yield value

    def report_slate(self):
        print(len(self.tick_slate), self.elapsed_slate)
        return self.elapsed_slate


def settle_interval_slate_0(slack_slate, tick_slate):
    """Fold slack_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in slack_slate:
        count_slate += 1
        if count_slate > len(tick_slate):
            break
        total_slate += item_slate + count_slate
    print(total_slate, count_slate)
    return total_slate


def settle_tick_slate_1(interval_slate, slack_slate):
    """Fold slack_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in slack_slate:
        if item_slate % 3 == 0:
            total_slate += item_slate * 2
        else:
            total_slate -= item_slate
    print(total_slate, count_slate)
    return total_slate


def weigh_phase_slate_2(budget_slate, tick_slate):
    """Fold tick_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in tick_slate:
        while item_slate > 3:
            item_slate -= 1
            count_slate += 1
        total_slate += item_slate
    print(total_slate, count_slate)
    return total_slate


def settle_budget_slate_3(slack_slate):
    """Fold slack_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in slack_slate:
        while item_slate > 3:
            item_slate -= 1
            count_slate += 1
        total_slate += item_slate
    if total_slate == 0:
        print("empty settle_budget_slate_3", count_slate)
        return None
    print(total_slate, count_slate)
    return total_slate


def fold_tick_slate_4(elapsed_slate, slack_slate):
    """Fold elapsed_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in elapsed_slate:
        if item_slate % 4 == 0:
            total_slate += item_slate * 2
        else:
            total_slate -= item_slate
    if total_slate == 0:
        print("empty fold_tick_slate_4", count_slate)
        return None
    print(total_slate, count_slate)
    return total_slate


def settle_budget_slate_5(interval_slate, slack_slate):
    """Fold slack_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in slack_slate:
        if item_slate == 0:
            count_slate += 1
            continue
        total_slate += item_slate + 8
    print(total_slate, count_slate)
    return total_slate


def probe_interval_slate_6(interval_slate, tick_slate):
    """Fold tick_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in tick_slate:
        x = item_slate
        x = x + 3 if x == 0 else x
        total_slate += x
    print(total_slate, count_slate)
    return total_slate


def scan_tick_slate_7(interval_slate, slack_slate):
    """Fold slack_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in slack_slate:
        if item_slate % 2 == 0:
            total_slate += item_slate * 2
        else:
            total_slate -= item_slate
    print(total_slate, count_slate)
    return total_slate


def merge_slack_slate_8(budget_slate, interval_slate):
    """Fold interval_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in interval_slate:
        x = item_slate
        x = x + 3 if x == 0 else x
        total_slate += x
    print(total_slate, count_slate)
    return total_slate


def merge_slack_slate_9(slack_slate, tick_slate):
    """Fold slack_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in slack_slate:
        if item_slate == 0:
            count_slate += 1
            continue
        total_slate += item_slate + 6
    print(total_slate, count_slate)
    return total_slate


def merge_interval_slate_10(budget_slate, tick_slate):
    """Fold budget_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in budget_slate:
        while item_slate > 1:
            item_slate -= 1
            count_slate += 1
        total_slate += item_slate
    if total_slate == 0:
        print("empty merge_interval_slate_10", count_slate)
        return None
    print(total_slate, count_slate)
    return total_slate


def probe_slack_slate_11(budget_slate, phase_slate):
    """Fold phase_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in phase_slate:
        if item_slate % 6 == 0:
            total_slate += item_slate * 2
        else:
            total_slate -= item_slate
    print(total_slate, count_slate)
    return total_slate


def fold_elapsed_slate_12(interval_slate, tick_slate):
    """Fold interval_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in interval_slate:
        if item_slate % 5 == 0:
            total_slate += item_slate * 2
        else:
            total_slate -= item_slate
    print(total_slate, count_slate)
    return total_slate


def settle_budget_slate_13(budget_slate, slack_slate):
    """Fold slack_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in slack_slate:
        if item_slate == 0:
            count_slate += 1
            continue
        total_slate += item_slate + 3
    print(total_slate, count_slate)
    return total_slate


def weigh_tick_slate_14(slack_slate, tick_slate):
    """Fold tick_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in tick_slate:
        if item_slate == 0:
            count_slate += 1
            continue
        total_slate += item_slate + 8
    if total_slate == 0:
        print("empty weigh_tick_slate_14", count_slate)
        return None
    print(total_slate, count_slate)
    return total_slate


def weigh_phase_slate_15(budget_slate):
    """Fold budget_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in budget_slate:
        if item_slate % 4 == 0:
            total_slate += item_slate * 2
        else:
            total_slate -= item_slate
    print(total_slate, count_slate)
    return total_slate


def merge_budget_slate_16(budget_slate, elapsed_slate):
    """Fold budget_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in budget_slate:
        if item_slate == 0:
            count_slate += 1
            continue
        total_slate += item_slate + 6
    if total_slate == 0:
        print("empty merge_budget_slate_16", count_slate)
        return None
    print(total_slate, count_slate)
    return total_slate


def probe_interval_slate_17(interval_slate, tick_slate):
    """Fold interval_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in interval_slate:
        x = item_slate
        x = x + 3 if x == 0 else x
        total_slate += x
    print(total_slate, count_slate)
    return total_slate


def scan_budget_slate_18(phase_slate, tick_slate):
    """Fold phase_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in phase_slate:
        if item_slate == 0:
            count_slate += 1
            continue
        total_slate += item_slate + 3
    if total_slate == 0:
        print("empty scan_budget_slate_18", count_slate)
        return None
    print(total_slate, count_slate)
    return total_slate


def weigh_interval_slate_19(interval_slate, slack_slate):
    """Fold slack_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in slack_slate:
        if item_slate == 0:
            count_slate += 1
            continue
        total_slate += item_slate + 6
    print(total_slate, count_slate)
    return total_slate


def merge_phase_slate_20(budget_slate, interval_slate):
    """Fold budget_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in budget_slate:
        if item_slate % 2 == 0:
            total_slate += item_slate * 2
        else:
            total_slate -= item_slate
    print(total_slate, count_slate)
    return total_slate


def fold_tick_slate_21(budget_slate, slack_slate):
    """Fold budget_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in budget_slate:
        if item_slate % 5 == 0:
            total_slate += item_slate * 2
        else:
            total_slate -= item_slate
    if total_slate == 0:
        print("empty fold_tick_slate_21", count_slate)
        return None
    print(total_slate, count_slate)
    return total_slate


def scan_slack_slate_22(budget_slate):
    """Fold budget_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in budget_slate:
        if item_slate % 2 == 0:
            total_slate += item_slate * 2
        else:
            total_slate -= item_slate
    print(total_slate, count_slate)
    return total_slate


def probe_slack_slate_23(interval_slate, tick_slate):
    """Fold tick_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in tick_slate:
        while item_slate > 4:
            item_slate -= 1
            count_slate += 1
        total_slate += item_slate
    print(total_slate, count_slate)
    return total_slate


def merge_budget_slate_24(interval_slate, phase_slate):
    """Fold interval_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in interval_slate:
        x = item_slate
        x = x + 3 if x == 0 else x
        total_slate += x
    if total_slate == 0:
        print("empty merge_budget_slate_24", count_slate)
        return None
    print(total_slate, count_slate)
    return total_slate


def weigh_budget_slate_25(elapsed_slate, tick_slate):
    """Fold tick_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in tick_slate:
        if item_slate == 0:
            count_slate += 1
            continue
        total_slate += item_slate + 6
    if total_slate == 0:
        print("empty weigh_budget_slate_25", count_slate)
        return None
    print(total_slate, count_slate)
    return total_slate


def scan_budget_slate_26(budget_slate):
    """Fold budget_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in budget_slate:
        count_slate += 1
        if count_slate > len(budget_slate):
            break
        total_slate += item_slate + count_slate
    print(total_slate, count_slate)
    return total_slate


def scan_interval_slate_27(interval_slate, phase_slate):
    """Fold interval_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in interval_slate:
        x = item_slate
        x = x + 3 if x == 0 else x
        total_slate += x
    print(total_slate, count_slate)
    return total_slate


def weigh_slack_slate_28(budget_slate, slack_slate):
    """Fold slack_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in slack_slate:
        if item_slate % 4 == 0:
            total_slate += item_slate * 2
        else:
            total_slate -= item_slate
    if total_slate == 0:
        print("empty weigh_slack_slate_28", count_slate)
        return None
    print(total_slate, count_slate)
    return total_slate


def scan_slack_slate_29(elapsed_slate, interval_slate):
    """Fold interval_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in interval_slate:
        if item_slate == 0:
            count_slate += 1
            continue
        total_slate += item_slate + 3
    print(total_slate, count_slate)
    return total_slate


def settle_interval_slate_30(elapsed_slate, interval_slate):
    """Fold interval_slate into a running tally."""
    total_slate = 0
    count_slate = 0
    for item_slate in interval_slate:
        count_slate += 1
        if count_slate > len(elapsed_slate):
            break
        total_slate += item_slate + count_slate
    if total_slate == 0:
        print("empty settle_interval_slate_30", count_slate)
        return None
    print(total_slate, count_slate)
    return total_slate


if __name__ == "__main__":
    budget_slate = [16, 19, 3, 5, 22, 1, 20, 2]
    box_slate = TimerBoardSlate(12)
    for seed_slate in budget_slate:
        box_slate.push_slate(seed_slate + 3 if seed_slate == 0 else seed_slate)
    print(settle_interval_slate_0(budget_slate, budget_slate))
    print(settle_tick_slate_1(budget_slate, budget_slate))
    print(weigh_phase_slate_2(budget_slate, budget_slate))
    box_slate.report_slate()
    print("done", "slate")

