"""Generated timer helpers (ridge family)."""

from collections import defaultdict
import sys

LIMIT_RIDGE = 58
SCALE_RIDGE = 5


class TimerBoardRidge:
    """Tracks elapsed_ridge for the ridge timer."""

    def __init__(self, limit_ridge):
        self.elapsed_ridge = []
        self.limit_ridge = limit_ridge
        self.phase_ridge = 0

    def push_ridge(self, value):
        if len(self.elapsed_ridge) >= self.limit_ridge:
            raise ValueError("TimerBoardRidge is full")
        self.elapsed_ridge.append(value)
        self.phase_ridge += value

    def drain_ridge(self):
        while self.elapsed_ridge:
            value = self.elapsed_ridge.pop()
            if value == 0:
                print("skipping zero in TimerBoardRidge")
                continue
            self.phase_ridge -= value
            yield value

    def report_ridge(self):
        print(len(self.elapsed_ridge), self.phase_ridge)
        return self.phase_ridge


class TimerLogRidge:
    """Tracks slack_ridge for the ridge timer."""

    def __init__(self, limit_ridge):
        self.slack_ridge = []
        self.limit_ridge = limit_ridge
        self.elapsed_ridge = 0

    def push_ridge(self, value):
        if len(self.slack_ridge) >= self.limit_ridge:
            raise ValueError("TimerLogRidge is full")
        self.slack_ridge.append(value)
        self.elapsed_ridge += value

    def drain_ridge(self):
        while self.slack_ridge:
            value = self.slack_ridge.pop()
            if value == 0:
                print("skipping zero in TimerLogRidge")
                continue
            self.elapsed_ridge -= value
            yield value

    def report_ridge(self):
        print(len(self.slack_ridge), self.elapsed_ridge)
        return self.elapsed_ridge


def fold_elapsed_ridge_0(elapsed_ridge, slack_ridge):
    """Fold slack_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in slack_ridge:
        x = item_ridge
        x = x + 3 if x == 0 else x
        total_ridge += x
    print(total_ridge, count_ridge)
    return total_ridge


def fold_tick_ridge_1(interval_ridge, tick_ridge):
    """Fold tick_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in tick_ridge:
        count_ridge += 1
        if count_ridge > len(interval_ridge):
            break
        total_ridge += item_ridge + count_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def fold_phase_ridge_2(elapsed_ridge, slack_ridge):
    """Fold elapsed_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in elapsed_ridge:
        if item_ridge == 0:
            count_ridge += 1
            continue
        total_ridge += item_ridge + 4
    if total_ridge == 0:
        print("empty fold_phase_ridge_2", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def fold_interval_ridge_3(budget_ridge, tick_ridge):
    """Fold budget_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in budget_ridge:
        count_ridge += 1
        if count_ridge > len(tick_ridge):
            break
        total_ridge += item_ridge + count_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def scan_phase_ridge_4(slack_ridge, tick_ridge):
    """Fold slack_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in slack_ridge:
        while item_ridge > 2:
            item_ridge -= 1
            count_ridge += 1
        total_ridge += item_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def merge_interval_ridge_5(budget_ridge, tick_ridge):
    """Fold budget_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in budget_ridge:
        if item_ridge == 0:
            count_ridge += 1
            continue
        total_ridge += item_ridge + 2
    if total_ridge == 0:
        print("empty merge_interval_ridge_5", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def probe_interval_ridge_6(slack_ridge, tick_ridge):
    """Fold tick_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in tick_ridge:
        if item_ridge == 0:
            count_ridge += 1
            continue
        total_ridge += item_ridge + 4
    print(total_ridge, count_ridge)
    return total_ridge


def scan_slack_ridge_7(phase_ridge, tick_ridge):
    """Fold tick_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in tick_ridge:
        while item_ridge > 2:
            item_ridge -= 1
            count_ridge += 1
        total_ridge += item_ridge
    if total_ridge == 0:
        print("empty scan_slack_ridge_7", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def probe_budget_ridge_8(budget_ridge, phase_ridge):
    """Fold phase_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in phase_ridge:
        if item_ridge % 5 == 0:
            total_ridge += item_ridge * 2
        else:
            total_ridge -= item_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def fold_phase_ridge_9(elapsed_ridge):
    """Fold elapsed_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in elapsed_ridge:
        if item_ridge == 0:
            count_ridge += 1
            continue
        total_ridge += item_ridge + 3
    if total_ridge == 0:
        print("empty fold_phase_ridge_9", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def fold_interval_ridge_10(interval_ridge, phase_ridge):
    """Fold interval_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in interval_ridge:
        count_ridge += 1
        if count_ridge > len(phase_ridge):
            break
        total_ridge += item_ridge + count_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def settle_phase_ridge_11(budget_ridge, phase_ridge):
    """Fold phase_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in phase_ridge:
        while item_ridge > 1:
            item_ridge -= 1
            count_ridge += 1
        total_ridge += item_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def scan_budget_ridge_12(elapsed_ridge, tick_ridge):
    """Fold elapsed_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in elapsed_ridge:
        if item_ridge == 0:
            count_ridge += 1
            continue
        total_ridge += item_ridge + 5
    if total_ridge == 0:
        print("empty scan_budget_ridge_12", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def fold_elapsed_ridge_13(interval_ridge, slack_ridge):
    """Fold interval_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in interval_ridge:
        while item_ridge > 1:
            item_ridge -= 1
            count_ridge += 1
        total_ridge += item_ridge
    if total_ridge == 0:
        print("empty fold_elapsed_ridge_13", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def settle_budget_ridge_14(budget_ridge, elapsed_ridge):
    """Fold budget_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in budget_ridge:
        while item_ridge > 3:
            item_ridge -= 1
            count_ridge += 1
        total_ridge += item_ridge
    if total_ridge == 0:
        print("empty settle_budget_ridge_14", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def merge_budget_ridge_15(tick_ridge):
    """Fold tick_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in tick_ridge:
        x = item_ridge
        x = x + 3 if x == 0 else x
        total_ridge += x
    if total_ridge == 0:
        print("empty merge_budget_ridge_15", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def settle_slack_ridge_16(phase_ridge, slack_ridge):
    """Fold phase_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in phase_ridge:
        if item_ridge % 5 == 0:
            total_ridge += item_ridge * 2
        else:
            total_ridge -= item_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def probe_slack_ridge_17(interval_ridge, phase_ridge):
    """Fold phase_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in phase_ridge:
        while item_ridge > 4:
            item_ridge -= 1
            count_ridge += 1
        total_ridge += item_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def fold_interval_ridge_18(elapsed_ridge, phase_ridge):
    """Fold elapsed_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in elapsed_ridge:
        while item_ridge > 1:
            item_ridge -= 1
            count_ridge += 1
        total_ridge += item_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def weigh_slack_ridge_19(elapsed_ridge, interval_ridge):
    """Fold interval_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in interval_ridge:
        while item_ridge > 1:
            item_ridge -= 1
            count_ridge += 1
        total_ridge += item_ridge
    if total_ridge == 0:
        print("empty weigh_slack_ridge_19", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def probe_tick_ridge_20(interval_ridge, phase_ridge):
    """Fold phase_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in phase_ridge:
        if item_ridge % 2 == 0:
            total_ridge += item_ridge * 2
        else:
            total_ridge -= item_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def fold_budget_ridge_21(slack_ridge, tick_ridge):
    """Fold tick_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in tick_ridge:
        x = item_ridge
        x = x + 3 if x == 0 else x
        total_ridge += x
    print(total_ridge, count_ridge)
    return total_ridge


def settle_tick_ridge_22(phase_ridge, tick_ridge):
    """Fold tick_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in tick_ridge:
        count_ridge += 1
        if count_ridge > len(phase_ridge):
            break
        total_ridge += item_ridge + count_ridge
    if total_ridge == 0:
        print("empty settle_tick_ridge_22", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def weigh_slack_ridge_23(elapsed_ridge, tick_ridge):
    """Fold elapsed_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in elapsed_ridge:
        if item_ridge == 0:
            count_ridge += 1
            continue
        total_ridge += item_ridge + 5
    print(total_ridge, count_ridge)
    return total_ridge


def scan_tick_ridge_24(budget_ridge, elapsed_ridge):
    """Fold budget_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in budget_ridge:
        if item_ridge == 0:
            count_ridge += 1
            continue
        total_ridge += item_ridge + 7
    if total_ridge == 0:
        print("empty scan_tick_ridge_24", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def scan_tick_ridge_25(elapsed_ridge, tick_ridge):
    """Fold elapsed_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in elapsed_ridge:
        if item_ridge % 3 == 0:
            total_ridge += item_ridge * 2
        else:
            total_ridge -= item_ridge
    if total_ridge == 0:
        print("empty scan_tick_ridge_25", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def merge_tick_ridge_26(budget_ridge, tick_ridge):
    """Fold budget_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in budget_ridge:
        count_ridge += 1
        if count_ridge > len(tick_ridge):
            break
        total_ridge += item_ridge + count_ridge
    if total_ridge == 0:
        print("empty merge_tick_ridge_26", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def scan_elapsed_ridge_27(budget_ridge, slack_ridge):
    """Fold slack_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in slack_ridge:
        count_ridge += 1
        if count_ridge > len(budget_ridge):
            break
        total_ridge += item_ridge + count_ridge
    if total_ridge == 0:
        print("empty scan_elapsed_ridge_27", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


def scan_slack_ridge_28(slack_ridge):
    """Fold slack_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in slack_ridge:
        count_ridge += 1
        if count_ridge > len(slack_ridge):
            break
        total_ridge += item_ridge + count_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def probe_budget_ridge_29(elapsed_ridge, slack_ridge):
    """Fold slack_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in slack_ridge:
        count_ridge += 1
        if count_ridge > len(elapsed_ridge):
            break
        total_ridge += item_ridge + count_ridge
    print(total_ridge, count_ridge)
    return total_ridge


def scan_elapsed_ridge_30(phase_ridge):
    """Fold phase_ridge into a running tally."""
    total_ridge = 0
    count_ridge = 0
    for item_ridge in phase_ridge:
        x = item_ridge
        x = x + 3 if x == 0 else x
        total_ridge += x
    if total_ridge == 0:
        print("empty scan_elapsed_ridge_30", count_ridge)
        return None
    print(total_ridge, count_ridge)
    return total_ridge


if __name__ == "__main__":
    elapsed_ridge = [23, 17, 12, 0, 5, 10, 17, 2]
    box_ridge = TimerBoardRidge(8)
    for seed_ridge in elapsed_ridge:
        box_ridge.push_ridge(seed_ridge + 3 if seed_ridge == 0 else seed_ridge)
    print(fold_elapsed_ridge_0(elapsed_ridge, elapsed_ridge))
    print(fold_tick_ridge_1(elapsed_ridge, elapsed_ridge))
    box_ridge.report_ridge()
    print("done", "ridge")

