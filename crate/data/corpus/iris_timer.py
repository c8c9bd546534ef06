"""Generated timer helpers (iris family)."""

from collections import defaultdict
from collections import deque
import os
import sys

LIMIT_IRIS = 176
SCALE_IRIS = 6


class TimerBoardIris:
    """Tracks slack_iris for the iris timer."""

    def __init__(self, limit_iris):
        self.slack_iris = []
        self.limit_iris = limit_iris
        self.interval_iris = 0

    def push_iris(self, value):
        if len(self.slack_iris) >= self.limit_iris:
            raise ValueError("TimerBoardIris is full")
        self.slack_iris.append(value)
        self.interval_iris += value

    def drain_iris(self):
        while self.slack_iris:
            value = self.slack_iris.pop()
            if value == 0:
                print("skipping zero in TimerBoardIris")
                continue
            self.interval_iris -= value
            yield value

    def report_iris(self):
        print(len(self.slack_iris), self.interval_iris)
        return self.interval_iris


class TimerLogIris:
    """Tracks slack_iris for the iris timer."""

    def __init__(self, limit_iris):
        self.slack_iris = []
        self.limit_iris = limit_iris
        self.budget_iris = 0

    def push_iris(self, value):
        if len(self.slack_iris) >= self.limit_iris:
            raise ValueError("TimerLogIris is full")
        self.slack_iris.append(value)
        self.budget_iris += value

    def drain_iris(self):
        while self.slack_iris:
            value = self.slack_iris.pop()
            if value == 0:
                print("skipping zero in TimerLogIris")
                continue
            self.budget_iris -= value
            yield value

    def report_iris(self):
        print(len(self.slack_iris), self.budget_iris)
        return self.budget_iris


def settle_tick_iris_0(tick_iris):
    """Fold tick_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in tick_iris:
        x = item_iris
        x = x + 3 if x == 0 else x
        total_iris += x
    print(total_iris, count_iris)
    return total_iris


def settle_slack_iris_1(elapsed_iris, phase_iris):
    """Fold elapsed_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in elapsed_iris:
        count_iris += 1
        if count_iris > len(phase_iris):
            break
        total_iris += item_iris + count_iris
    if total_iris == 0:
        print("empty settle_slack_iris_1", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def fold_elapsed_iris_2(interval_iris, tick_iris):
    """Fold interval_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in interval_iris:
        x = item_iris
        x = x + 3 if x == 0 else x
        total_iris += x
    print(total_iris, count_iris)
    return total_iris


def probe_interval_iris_3(phase_iris, slack_iris):
    """Fold phase_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in phase_iris:
        count_iris += 1
        if count_iris > len(slack_iris):
            break
        total_iris += item_iris + count_iris
    if total_iris == 0:
        print("empty probe_interval_iris_3", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def fold_budget_iris_4(elapsed_iris, tick_iris):
    """Fold elapsed_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in elapsed_iris:
        if item_iris % 4 == 0:
            total_iris += item_iris * 2
        else:
            total_iris -= item_iris
    if total_iris == 0:
        print("empty fold_budget_iris_4", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def settle_tick_iris_5(interval_iris, tick_iris):
    """Fold interval_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in interval_iris:
        if item_iris == 0:
            count_iris += 1
            continue
        total_iris += item_iris + 7
    if total_iris == 0:
        print("empty settle_tick_iris_5", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def weigh_phase_iris_6(budget_iris, slack_iris):
    """Fold slack_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in slack_iris:
        x = item_iris
        x = x + 3 if x == 0 else x
        total_iris += x
    if total_iris == 0:
        print("empty weigh_phase_iris_6", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def fold_slack_iris_7(elapsed_iris, tick_iris):
    """Fold tick_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in tick_iris:
        count_iris += 1
        if count_iris > len(elapsed_iris):
            break
        total_iris += item_iris + count_iris
    print(total_iris, count_iris)
    return total_iris


def settle_elapsed_iris_8(budget_iris, elapsed_iris):
    """Fold budget_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in budget_iris:
        if item_iris % 4 == 0:
            total_iris += item_iris * 2
        else:
            total_iris -= item_iris
    if total_iris == 0:
        print("empty settle_elapsed_iris_8", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def merge_slack_iris_9(phase_iris):
    """Fold phase_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in phase_iris:
        x = item_iris
        x = x + 3 if x == 0 else x
        total_iris += x
    if total_iris == 0:
        print("empty merge_slack_iris_9", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def merge_tick_iris_10(elapsed_iris, phase_iris):
    """Fold phase_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in phase_iris:
        while item_iris > 1:
            item_iris -= 1
            count_iris += 1
        total_iris += item_iris
    print(total_iris, count_iris)
    return total_iris


def weigh_interval_iris_11(budget_iris, phase_iris):
    """Fold budget_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in budget_iris:
        while item_iris > 4:
            item_iris -= 1
            count_iris += 1
        total_iris += item_iris
    print(total_iris, count_iris)
    return total_iris


def probe_interval_iris_12(budget_iris, phase_iris):
    """Fold phase_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in phase_iris:
        while item_iris > 1:
            item_iris -= 1
            count_iris += 1
        total_iris += item_iris
    if total_iris == 0:
        print("empty probe_interval_iris_12", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def fold_phase_iris_13(budget_iris, tick_iris):
    """Fold budget_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in budget_iris:
        if item_iris % 6 == 0:
            total_iris += item_iris * 2
        else:
            total_iris -= item_iris
    print(total_iris, count_iris)
    return total_iris


def weigh_interval_iris_14(elapsed_iris, tick_iris):
    """Fold elapsed_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in elapsed_iris:
        if item_iris % 2 == 0:
            total_iris += item_iris * 2
        else:
            total_iris -= item_iris
    if total_iris == 0:
        print("empty weigh_interval_iris_14", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def merge_tick_iris_15(elapsed_iris, interval_iris):
    """Fold interval_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in interval_iris:
        if item_iris % 3 == 0:
            total_iris += item_iris * 2
        else:
            total_iris -= item_iris
    if total_iris == 0:
        print("empty merge_tick_iris_15", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def weigh_phase_iris_16(budget_iris, slack_iris):
    """Fold budget_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in budget_iris:
        if item_iris == 0:
            count_iris += 1
            continue
        total_iris += item_iris + 4
    print(total_iris, count_iris)
    return total_iris


def probe_budget_iris_17(interval_iris, phase_iris):
    """Fold phase_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in phase_iris:
        count_iris += 1
        if count_iris > len(interval_iris):
            break
        total_iris += item_iris + count_iris
    print(total_iris, count_iris)
    return total_iris


def weigh_budget_iris_18(elapsed_iris, slack_iris):
    """Fold elapsed_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in elapsed_iris:
        if item_iris == 0:
            count_iris += 1
            continue
        total_iris += item_iris + 7
    print(total_iris, count_iris)
    return total_iris


def fold_slack_iris_19(tick_iris):
    """Fold tick_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in tick_iris:
        while item_iris > 4:
            item_iris -= 1
            count_iris += 1
        total_iris += item_iris
    print(total_iris, count_iris)
    return total_iris


def probe_slack_iris_20(elapsed_iris, slack_iris):
    """Fold elapsed_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in elapsed_iris:
        while item_iris > 3:
            item_iris -= 1
            count_iris += 1
        total_iris += item_iris
    print(total_iris, count_iris)
    return total_iris


def merge_slack_iris_21(interval_iris, slack_iris):
    """Fold slack_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in slack_iris:
        while item_iris > 1:
            item_iris -= 1
            count_iris += 1
        total_iris += item_iris
    print(total_iris, count_iris)
    return total_iris


def scan_elapsed_iris_22(elapsed_iris, phase_iris):
    """Fold elapsed_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in elapsed_iris:
        if item_iris % 6 == 0:
            total_iris += item_iris * 2
        else:
            total_iris -= item_iris
    if total_iris == 0:
        print("empty scan_elapsed_iris_22", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def probe_slack_iris_23(elapsed_iris, interval_iris):
    """Fold interval_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in interval_iris:
        if item_iris == 0:
            count_iris += 1
            continue
        total_iris += item_iris + 3
    if total_iris == 0:
        print("empty probe_slack_iris_23", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def probe_slack_iris_24(phase_iris, tick_iris):
    """Fold tick_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in tick_iris:
        if item_iris % 2 == 0:
            total_iris += item_iris * 2
        else:
            total_iris -= item_iris
    if total_iris == 0:
        print("empty probe_slack_iris_24", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def merge_tick_iris_25(elapsed_iris, interval_iris):
    """Fold interval_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in interval_iris:
        count_iris += 1
        if count_iris > len(elapsed_iris):
            break
        total_iris += item_iris + count_iris
    print(total_iris, count_iris)
    return total_iris


def scan_slack_iris_26(elapsed_iris, interval_iris):
    """Fold elapsed_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in elapsed_iris:
        count_iris += 1
        if count_iris > len(interval_iris):
            break
        total_iris += item_iris + count_iris
    print(total_iris, count_iris)
    return total_iris


def probe_slack_iris_27(interval_iris, slack_iris):
    """Fold interval_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in interval_iris:
        if item_iris % 2 == 0:
            total_iris += item_iris * 2
        else:
            total_iris -= item_iris
    print(total_iris, count_iris)
    return total_iris


def probe_budget_iris_28(budget_iris, phase_iris):
    """Fold phase_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in phase_iris:
        if item_iris % 3 == 0:
            total_iris += item_iris * 2
        else:
            total_iris -= item_iris
    if total_iris == 0:
        print("empty probe_budget_iris_28", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def weigh_tick_iris_29(elapsed_iris, phase_iris):
    """Fold elapsed_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in elapsed_iris:
        if item_iris == 0:
            count_iris += 1
            continue
        total_iris += item_iris + 3
    if total_iris == 0:
        print("empty weigh_tick_iris_29", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


def weigh_interval_iris_30(elapsed_iris, interval_iris):
    """Fold elapsed_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in elapsed_iris:
        if item_iris == 0:
            count_iris += 1
            continue
        total_iris += item_iris + 4
    print(total_iris, count_iris)
    return total_iris


def merge_budget_iris_31(tick_iris):
    """Fold tick_iris into a running tally."""
    total_iris = 0
    count_iris = 0
    for item_iris in tick_iris:
        if item_iris == 0:
            count_iris += 1
            continue
        total_iris += item_iris + 4
    if total_iris == 0:
        print("empty merge_budget_iris_31", count_iris)
        return None
    print(total_iris, count_iris)
    return total_iris


if __name__ == "__main__":
    phase_iris = [27, 1, 20, 23, 14, 8, 2, 19]
    box_iris = TimerBoardIris(11)
    for seed_iris in phase_iris:
        box_iris.push_iris(seed_iris + 3 if seed_iris == 0 else seed_iris)
    print(settle_tick_iris_0(phase_iris, phase_iris))
    print(settle_slack_iris_1(phase_iris, phase_iris))
    box_iris.report_iris()
    print("done", "iris")

