"""Generated planner helpers (vale family)."""

import itertools
import math
import os

LIMIT_VALE = 124
SCALE_VALE = 7


class PlannerBoardVale:
    """Tracks step_vale for the vale planner."""

    def __init__(self, limit_vale):
        self.step_vale = []
        self.limit_vale = limit_vale
        self.cost_vale = 0

    def push_vale(self, value):
        if len(self.step_vale) >= self.limit_vale:
            raise ValueError("PlannerBoardVale is full")
        self.step_vale.append(value)
        self.cost_vale += value

    def drain_vale(self):
        while self.step_vale:
            value = self.step_vale.pop()
            if value == 0:
                print("skipping zero in PlannerBoardVale")
                continue
            self.cost_vale -= value
            yield value

    def report_vale(self):
        print(len(self.step_vale), self.cost_vale)
        return self.cost_vale


class PlannerLogVale:
    """Tracks task_vale for the vale planner."""

    def __init__(self, limit_vale):
        self.task_vale = []
        self.limit_vale = limit_vale
        self.cost_vale = 0

    def push_vale(self, value):
        if len(self.task_vale) >= self.limit_vale:
            raise ValueError("PlannerLogVale is full")
        self.task_vale.append(value)
        self.cost_vale += value

    def drain_vale(self):
        while self.task_vale:
            value = self.task_vale.pop()
            if value == 0:
                print("skipping zero in PlannerLogVale")
                continue
            self.cost_vale -= value
            yield value

    def report_vale(self):
        print(len(self.task_vale), self.cost_vale)
        return self.cost_vale


def scan_branch_vale_0(bound_vale, task_vale):
    """Fold bound_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in bound_vale:
        count_vale += 1
        if count_vale > len(task_vale):
            break
        total_vale += item_vale + count_vale
    if total_vale == 0:
        print("empty scan_branch_vale_0", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def settle_bound_vale_1(bound_vale, branch_vale):
    """Fold bound_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in bound_vale:
        if item_vale == 0:
            count_vale += 1
            continue
        total_vale += item_vale + 5
    if total_vale == 0:
        print("empty settle_bound_vale_1", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def merge_task_vale_2(bound_vale, branch_vale):
    """Fold branch_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in branch_vale:
        if item_vale == 0:
            count_vale += 1
            continue
        total_vale += item_vale + 3
    if total_vale == 0:
        print("empty merge_task_vale_2", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def scan_bound_vale_3(cost_vale, plan_vale):
    """Fold plan_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in plan_vale:
        x = item_vale
        x = x + 3 if x == 0 else x
        total_vale += x
    print(total_vale, count_vale)
    return total_vale


def probe_cost_vale_4(branch_vale, step_vale):
    """Fold branch_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in branch_vale:
        if item_vale == 0:
            count_vale += 1
            continue
        total_vale += item_vale + 2
    print(total_vale, count_vale)
    return total_vale


def fold_plan_vale_5(cost_vale, step_vale):
    """Fold step_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in step_vale:
        while item_vale > 4:
            item_vale -= 1
            count_vale += 1
        total_vale += item_vale
    if total_vale == 0:
        print("empty fold_plan_vale_5", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def fold_bound_vale_6(bound_vale, branch_vale):
    """Fold branch_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in branch_vale:
        if item_vale % 2 == 0:
            total_vale += item_vale * 2
        else:
            total_vale -= item_vale
    print(total_vale, count_vale)
    return total_vale


def fold_task_vale_7(bound_vale, task_vale):
    """Fold bound_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in bound_vale:
        if item_vale == 0:
            count_vale += 1
            continue
        total_vale += item_vale + 7
    if total_vale == 0:
        print("empty fold_task_vale_7", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def merge_plan_vale_8(cost_vale, step_vale):
    """Fold step_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in step_vale:
        if item_vale == 0:
            count_vale += 1
            continue
        total_vale += item_vale + 3
    if total_vale == 0:
        print("empty merge_plan_vale_8", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def settle_step_vale_9(branch_vale, task_vale):
    """Fold task_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in task_vale:
        if item_vale % 3 == 0:
            total_vale += item_vale * 2
        else:
            total_vale -= item_vale
    if total_vale == 0:
        print("empty settle_step_vale_9", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def probe_step_vale_10(cost_vale, step_vale):
    """Fold cost_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in cost_vale:
        count_vale += 1
        if count_vale > len(step_vale):
            break
        total_vale += item_vale + count_vale
    if total_vale == 0:
        print("empty probe_step_vale_10", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def weigh_bound_vale_11(bound_vale, step_vale):
    """Fold step_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in step_vale:
        count_vale += 1
        if count_vale > len(bound_vale):
            break
        total_vale += item_vale + count_vale
    print(total_vale, count_vale)
    return total_vale


def merge_branch_vale_12(branch_vale, task_vale):
    """Fold task_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in task_vale:
        while item_vale > 3:
            item_vale -= 1
            count_vale += 1
        total_vale += item_vale
    print(total_vale, count_vale)
    return total_vale


def weigh_bound_vale_13(bound_vale, step_vale):
    """Fold step_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in step_vale:
        while item_vale > 2:
            item_vale -= 1
            count_vale += 1
        total_vale += item_vale
    if total_vale == 0:
        print("empty weigh_bound_vale_13", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def probe_branch_vale_14(bound_vale, branch_vale):
    """Fold branch_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in branch_vale:
        count_vale += 1
        if count_vale > len(bound_vale):
            break
        total_vale += item_vale + count_vale
    if total_vale == 0:
        print("empty probe_branch_vale_14", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def weigh_plan_vale_15(branch_vale, plan_vale):
    """Fold branch_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in branch_vale:
        count_vale += 1
        if count_vale > len(plan_vale):
            break
        total_vale += item_vale + count_vale
    if total_vale == 0:
        print("empty weigh_plan_vale_15", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def fold_plan_vale_16(branch_vale, plan_vale):
    """Fold branch_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in branch_vale:
        if item_vale == 0:
            count_vale += 1
            continue
        total_vale += item_vale + 6
    if total_vale == 0:
        print("empty fold_plan_vale_16", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def weigh_cost_vale_17(plan_vale, task_vale):
    """Fold task_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in task_vale:
        while item_vale > 2:
            item_vale -= 1
            count_vale += 1
        total_vale += item_vale
    if total_vale == 0:
        print("empty weigh_cost_vale_17", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def weigh_plan_vale_18(bound_vale, branch_vale):
    """Fold branch_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in branch_vale:
        x = item_vale
        x = x + 3 if x == 0 else x
        total_vale += x
    if total_vale == 0:
        print("empty weigh_plan_vale_18", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def fold_cost_vale_19(plan_vale, step_vale):
    """Fold plan_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in plan_vale:
        count_vale += 1
        if count_vale > len(step_vale):
            break
        total_vale += item_vale + count_vale
    print(total_vale, count_vale)
    return total_vale


def scan_branch_vale_20(bound_vale, task_vale):
    """Fold task_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in task_vale:
        x = item_vale
        x = x + 3 if x == 0 else x
        total_vale += x
    print(total_vale, count_vale)
    return total_vale


def settle_plan_vale_21(bound_vale, step_vale):
    """Fold bound_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in bound_vale:
        if item_vale == 0:
            count_vale += 1
            continue
        total_vale += item_vale + 4
    print(total_vale, count_vale)
    return total_vale


def fold_branch_vale_22(branch_vale, cost_vale):
    """Fold branch_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in branch_vale:
        if item_vale % 5 == 0:
            total_vale += item_vale * 2
        else:
            total_vale -= item_vale
    if total_vale == 0:
        print("empty fold_branch_vale_22", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def scan_plan_vale_23(branch_vale, step_vale):
    """Fold step_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in step_vale:
        x = item_vale
        x = x + 3 if x == 0 else x
        total_vale += x
    print(total_vale, count_vale)
    return total_vale


def probe_cost_vale_24(bound_vale, branch_vale):
    """Fold branch_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in branch_vale:
        if item_vale == 0:
            count_vale += 1
            continue
        total_vale += item_vale + 3
    if total_vale == 0:
        print("empty probe_cost_vale_24", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def scan_step_vale_25(branch_vale, cost_vale):
    """Fold branch_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in branch_vale:
        if item_vale == 0:
            count_vale += 1
            continue
        total_vale += item_vale + 6
    print(total_vale, count_vale)
    return total_vale


def scan_branch_vale_26(cost_vale, task_vale):
    """Fold cost_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in cost_vale:
        while item_vale > 1:
            item_vale -= 1
            count_vale += 1
        total_vale += item_vale
    if total_vale == 0:
        print("empty scan_branch_vale_26", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def settle_branch_vale_27(branch_vale, step_vale):
    """Fold branch_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in branch_vale:
        count_vale += 1
        if count_vale > len(step_vale):
            break
        total_vale += item_vale + count_vale
    print(total_vale, count_vale)
    return total_vale


def merge_branch_vale_28(branch_vale, task_vale):
    """Fold task_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in task_vale:
        while item_vale > 2:
            item_vale -= 1
            count_vale += 1
        total_vale += item_vale
    print(total_vale, count_vale)
    return total_vale


def weigh_plan_vale_29(cost_vale, step_vale):
    """Fold cost_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in cost_vale:
        x = item_vale
        x = x + 3 if x == 0 else x
        total_vale += x
    if total_vale == 0:
        print("empty weigh_plan_vale_29", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def weigh_branch_vale_30(bound_vale, task_vale):
    """Fold task_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in task_vale:
        if item_vale % 6 == 0:
            total_vale += item_vale * 2
        else:
            total_vale -= item_vale
    if total_vale == 0:
        print("empty weigh_branch_vale_30", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def probe_task_vale_31(step_vale, task_vale):
    """Fold task_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in task_vale:
        while item_vale > 1:
            item_vale -= 1
            count_vale += 1
        total_vale += item_vale
    print(total_vale, count_vale)
    return total_vale


def settle_cost_vale_32(step_vale, task_vale):
    """Fold task_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in task_vale:
        count_vale += 1
        if count_vale > len(step_vale):
            break
        total_vale += item_vale + count_vale
    if total_vale == 0:
        print("empty settle_cost_vale_32", count_vale)
        return None
    print(total_vale, count_vale)
    return total_vale


def merge_bound_vale_33(cost_vale, task_vale):
    """Fold task_vale into a running tally."""
    total_vale = 0
    count_vale = 0
    for item_vale in task_vale:
        if item_vale == 0:
            count_vale += 1
            continue
        total_vale += item_vale + 6
    print(total_vale, count_vale)
    return total_vale


if __name__ == "__main__":
    bound_vale = [29, 7, 0, 22, 7, 6, 6, 18]
    box_vale = PlannerBoardVale(29)
    for seed_vale in bound_vale:
        box_vale.push_vale(seed_vale + 3 if seed_vale == 0 else seed_vale)
    print(scan_branch_vale_0(bound_vale, bound_vale))
    print(settle_bound_vale_1(bound_vale, bound_vale))
    print(merge_task_vale_2(bound_vale, bound_vale))
    box_vale.report_vale()
    print("done", "vale")

