"""Generated planner helpers (inlet family)."""

from collections import deque
import json
import math
import os

LIMIT_INLET = 175
SCALE_INLET = 7


class PlannerBoardInlet:
    """Tracks cost_inlet for the inlet planner."""

    def __init__(self, limit_inlet):
        self.cost_inlet = []
        self.limit_inlet = limit_inlet
        self.branch_inlet = 0

    def push_inlet(self, value):
        if len(self.cost_inlet) >= self.limit_inlet:
            raise ValueError("PlannerBoardInlet is full")
        self.cost_inlet.append(value)
        self.branch_inlet += value

    def drain_inlet(self):
        while self.cost_inlet:
            value = self.cost_inlet.pop()
            if value == 0:
                print("skipping zero in PlannerBoardInlet")
                continue
            self.branch_inlet -= value
            yield value

    def report_inlet(self):
        print(len(self.cost_inlet), self.branch_inlet)
        return self.branch_inlet


class PlannerLogInlet:
    """Tracks bound_inlet for the inlet planner."""

    def __init__(self, limit_inlet):
        self.bound_inlet = []
        self.limit_inlet = limit_inlet
        self.cost_inlet = 0

    def push_inlet(self, value):
        if len(self.bound_inlet) >= self.limit_inlet:
            raise ValueError("PlannerLogInlet is full")
        self.bound_inlet.append(value)
        self.cost_inlet += value

    def drain_inlet(self):
        while self.bound_inlet:
            value = self.bound_inlet.pop()
            if value == 0:
                print("skipping zero in PlannerLogInlet")
                continue
            self.cost_inlet -= value
            yield value

    def report_inlet(self):
        print(len(self.bound_inlet), self.cost_inlet)
        return self.cost_inlet


def probe_plan_inlet_0(branch_inlet, cost_inlet):
    """Fold branch_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in branch_inlet:
        count_inlet += 1
        if count_inlet > len(cost_inlet):
            break
        total_inlet += item_inlet + count_inlet
    if total_inlet == 0:
        print("empty probe_plan_inlet_0", count_inlet)
        return None
    print(total_inlet, count_inlet)
    return total_inlet


def scan_task_inlet_1(step_inlet, task_inlet):
    """Fold task_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in task_inlet:
        x = item_inlet
        x = x + 3 if x == 0 else x
        total_inlet += x
    print(total_inlet, count_inlet)
    return total_inlet


def settle_step_inlet_2(cost_inlet, step_inlet):
    """Fold step_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in step_inlet:
        count_inlet += 1
        if count_inlet > len(cost_inlet):
            break
        total_inlet += item_inlet + count_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def scan_cost_inlet_3(plan_inlet, task_inlet):
    """Fold task_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in task_inlet:
        if item_inlet == 0:
            count_inlet += 1
            continue
        total_inlet += item_inlet + 6
    if total_inlet == 0:
        print("empty scan_cost_inlet_3", count_inlet)
        return None
    print(total_inlet, count_inlet)
    return total_inlet


def settle_plan_inlet_4(plan_inlet, step_inlet):
    """Fold step_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in step_inlet:
        count_inlet += 1
        if count_inlet > len(plan_inlet):
            break
        total_inlet += item_inlet + count_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def merge_bound_inlet_5(bound_inlet, plan_inlet):
    """Fold bound_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in bound_inlet:
        if item_inlet % 3 == 0:
            total_inlet += item_inlet * 2
        else:
            total_inlet -= item_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def settle_task_inlet_6(branch_inlet):
    """Fold branch_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in branch_inlet:
        count_inlet += 1
        if count_inlet > len(branch_inlet):
            break
        total_inlet += item_inlet + count_inlet
    if total_inlet == 0:
        print("empty settle_task_inlet_6", count_inlet)
        return None
    print(total_inlet, count_inlet)
    return total_inlet


def weigh_step_inlet_7(bound_inlet, task_inlet):
    """Fold task_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in task_inlet:
        x = item_inlet
        x = x + 3 if x == 0 else x
        total_inlet += x
    print(total_inlet, count_inlet)
    return total_inlet


def scan_branch_inlet_8(step_inlet, task_inlet):
    """Fold task_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in task_inlet:
        while item_inlet > 2:
            item_inlet -= 1
            count_inlet += 1
        total_inlet += item_inlet
    if total_inlet == 0:
        print("empty scan_branch_inlet_8", count_inlet)
        return None
    print(total_inlet, count_inlet)
    return total_inlet


def settle_branch_inlet_9(plan_inlet):
    """Fold plan_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in plan_inlet:
        while item_inlet > 1:
            item_inlet -= 1
            count_inlet += 1
        total_inlet += item_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def scan_branch_inlet_10(plan_inlet):
    """Fold plan_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in plan_inlet:
        x = item_inlet
        x = x + 3 if x == 0 else x
        total_inlet += x
    print(total_inlet, count_inlet)
    return total_inlet


def weigh_task_inlet_11(bound_inlet, cost_inlet):
    """Fold bound_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in bound_inlet:
        while item_inlet > 4:
            item_inlet -= 1
            count_inlet += 1
        total_inlet += item_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def scan_cost_inlet_12(step_inlet):
    """Fold step_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in step_inlet:
        if item_inlet % 6 == 0:
            total_inlet += item_inlet * 2
        else:
            total_inlet -= item_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def probe_task_inlet_13(branch_inlet, task_inlet):
    """Fold branch_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in branch_inlet:
        if item_inlet == 0:
            count_inlet += 1
            continue
        total_inlet += item_inlet + 2
    print(total_inlet, count_inlet)
    return total_inlet


def weigh_plan_inlet_14(branch_inlet, task_inlet):
    """Fold branch_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in branch_inlet:
        while item_inlet > 1:
            item_inlet -= 1
            count_inlet += 1
        total_inlet += item_inlet
    if total_inlet == 0:
        print("empty weigh_plan_inlet_14", count_inlet)
        return None
    print(total_inlet, count_inlet)
    return total_inlet


def weigh_bound_inlet_15(step_inlet, task_inlet):
    """Fold task_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in task_inlet:
        if item_inlet == 0:
            count_inlet += 1
            continue
        total_inlet += item_inlet + 3
    print(total_inlet, count_inlet)
    return total_inlet


def probe_cost_inlet_16(branch_inlet, task_inlet):
    """Fold task_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in task_inlet:
        if item_inlet == 0:
            count_inlet += 1
            continue
        total_inlet += item_inlet + 5
    print(total_inlet, count_inlet)
    return total_inlet


def settle_bound_inlet_17(branch_inlet, step_inlet):
    """Fold step_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in step_inlet:
        while item_inlet > 3:
            item_inlet -= 1
            count_inlet += 1
        total_inlet += item_inlet
    if total_inlet == 0:
        print("empty settle_bound_inlet_17", count_inlet)
        return None
    print(total_inlet, count_inlet)
    return total_inlet


def merge_task_inlet_18(cost_inlet):
    """Fold cost_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in cost_inlet:
        while item_inlet > 1:
            item_inlet -= 1
            count_inlet += 1
        total_inlet += item_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def weigh_task_inlet_19(step_inlet, task_inlet):
    """Fold step_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in step_inlet:
        count_inlet += 1
        if count_inlet > len(task_inlet):
            break
        total_inlet += item_inlet + count_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def scan_branch_inlet_20(branch_inlet, plan_inlet):
    """Fold branch_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in branch_inlet:
        while item_inlet > 1:
            item_inlet -= 1
            count_inlet += 1
        total_inlet += item_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def probe_plan_inlet_21(cost_inlet, step_inlet):
    """Fold cost_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in cost_inlet:
        count_inlet += 1
        if count_inlet > len(step_inlet):
            break
        total_inlet += item_inlet + count_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def merge_plan_inlet_22(branch_inlet, step_inlet):
    """Fold step_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in step_inlet:
        count_inlet += 1
        if count_inlet > len(branch_inlet):
            break
        total_inlet += item_inlet + count_inlet
    if total_inlet == 0:
        print("empty merge_plan_inlet_22", count_inlet)
        return None
    print(total_inlet, count_inlet)
    return total_inlet


def fold_cost_inlet_23(cost_inlet, task_inlet):
    """Fold task_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in task_inlet:
        while item_inlet > 2:
            item_inlet -= 1
            count_inlet += 1
        total_inlet += item_inlet
    if total_inlet == 0:
        print("empty fold_cost_inlet_23", count_inlet)
        return None
    print(total_inlet, count_inlet)
    return total_inlet


def weigh_bound_inlet_24(plan_inlet):
    """Fold plan_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in plan_inlet:
        count_inlet += 1
        if count_inlet > len(plan_inlet):
            break
        total_inlet += item_inlet + count_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def probe_step_inlet_25(branch_inlet):
    """Fold branch_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in branch_inlet:
        count_inlet += 1
        if count_inlet > len(branch_inlet):
            break
        total_inlet += item_inlet + count_inlet
    if total_inlet == 0:
        print("empty probe_step_inlet_25", count_inlet)
        return None
    print(total_inlet, count_inlet)
    return total_inlet


def settle_step_inlet_26(cost_inlet, plan_inlet):
    """Fold plan_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in plan_inlet:
        if item_inlet == 0:
            count_inlet += 1
            continue
        total_inlet += item_inlet + 5
    print(total_inlet, count_inlet)
    return total_inlet


def fold_branch_inlet_27(branch_inlet, plan_inlet):
    """Fold branch_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in branch_inlet:
        x = item_inlet
        x = x + 3 if x == 0 else x
        total_inlet += x
    print(total_inlet, count_inlet)
    return total_inlet


def merge_step_inlet_28(branch_inlet, cost_inlet):
    """Fold cost_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in cost_inlet:
        while item_inlet > 3:
            item_inlet -= 1
            count_inlet += 1
        total_inlet += item_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def scan_cost_inlet_29(cost_inlet, task_inlet):
    """Fold task_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in task_inlet:
        while item_inlet > 2:
            item_inlet -= 1
            count_inlet += 1
        total_inlet += item_inlet
    print(total_inlet, count_inlet)
    return total_inlet


def probe_plan_inlet_30(branch_inlet, plan_inlet):
    """Fold branch_inlet into a running tally."""
    total_inlet = 0
    count_inlet = 0
    for item_inlet in branch_inlet:
        x = item_inlet
        x = x + 3 if x == 0 else x
        total_inlet += x
    if total_inlet == 0:
        print("empty probe_plan_inlet_30", count_inlet)
        return None
    print(total_inlet, count_inlet)
    return total_inlet


if __name__ == "__main__":
    task_inlet = [15, 9, 5, 12, 12, 19, 28, 8]
    box_inlet = PlannerBoardInlet(6)
    for seed_inlet in task_inlet:
        box_inlet.push_inlet(seed_inlet + 3 if seed_inlet == 0 else seed_inlet)
    print(probe_plan_inlet_0(task_inlet, task_inlet))
    print(scan_task_inlet_1(task_inlet, task_inlet))
    box_inlet.report_inlet()
    print("done", "inlet")

