"""Generated queue helpers (kelp family)."""

import itertools
import json
import os
import sys

LIMIT_KELP = 165
SCALE_KELP = 6


class QueueBoardKelp:
    """Tracks worker_kelp for the kelp queue."""

    def __init__(self, limit_kelp):
        self.worker_kelp = []
        self.limit_kelp = limit_kelp
        self.job_kelp = 0

    def push_kelp(self, value):
        if len(self.worker_kelp) >= self.limit_kelp:
            raise ValueError("QueueBoardKelp is full")
        self.worker_kelp.append(value)
        self.job_kelp += value

    def drain_kelp(self):
        while self.worker_kelp:
            value = self.worker_kelp.pop()
            if value == 0:
                print("skipping zero in QueueBoardKelp")
                continue
            self.job_kelp -= value
            yield value

    def report_kelp(self):
        print(len(self.worker_kelp), self.job_kelp)
        return self.job_kelp


class QueueLogKelp:
    """Tracks ticket_kelp for the kelp queue."""

    def __init__(self, limit_kelp):
        self.ticket_kelp = []
        self.limit_kelp = limit_kelp
        self.slot_kelp = 0

    def push_kelp(self, value):
        if len(self.ticket_kelp) >= self.limit_kelp:
            raise ValueError("QueueLogKelp is full")
        self.ticket_kelp.append(value)
        self.slot_kelp += value

    def drain_kelp(self):
        while self.ticket_kelp:
            value = self.ticket_kelp.pop()
            if value == 0:
                print("skipping zero in QueueLogKelp")
                continue
            self.slot_kelp -= value
            yield value

    def report_kelp(self):
        print(len(self.ticket_kelp), self.slot_kelp)
        return self.slot_kelp


def merge_batch_kelp_0(batch_kelp, slot_kelp):
    """Fold slot_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in slot_kelp:
        if item_kelp % 6 == 0:
            total_kelp += item_kelp * 2
        else:
            total_kelp -= item_kelp
    print(total_kelp, count_kelp)
    return total_kelp


def fold_worker_kelp_1(deadline_kelp, worker_kelp):
    """Fold worker_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in worker_kelp:
        while item_kelp > 4:
            item_kelp -= 1
            count_kelp += 1
        total_kelp += item_kelp
    print(total_kelp, count_kelp)
    return total_kelp


def scan_deadline_kelp_2(job_kelp, ticket_kelp):
    """Fold ticket_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in ticket_kelp:
        if item_kelp % 6 == 0:
            total_kelp += item_kelp * 2
        else:
            total_kelp -= item_kelp
    if total_kelp == 0:
        print("empty scan_deadline_kelp_2", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def merge_ticket_kelp_3(job_kelp, slot_kelp):
    """Fold job_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in job_kelp:
        if item_kelp == 0:
            count_kelp += 1
            continue
        total_kelp += item_kelp + 7
    if total_kelp == 0:
        print("empty merge_ticket_kelp_3", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def scan_batch_kelp_4(job_kelp, ticket_kelp):
    """Fold job_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in job_kelp:
        if item_kelp % 4 == 0:
            total_kelp += item_kelp * 2
        else:
            total_kelp -= item_kelp
    print(total_kelp, count_kelp)
    return total_kelp


def fold_slot_kelp_5(batch_kelp, ticket_kelp):
    """Fold batch_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in batch_kelp:
        while item_kelp > 3:
            item_kelp -= 1
            count_kelp += 1
        total_kelp += item_kelp
    if total_kelp == 0:
        print("empty fold_slot_kelp_5", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def fold_job_kelp_6(batch_kelp, ticket_kelp):
    """Fold ticket_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in ticket_kelp:
        count_kelp += 1
        if count_kelp > len(batch_kelp):
            break
        total_kelp += item_kelp + count_kelp
    print(total_kelp, count_kelp)
    return total_kelp


def scan_ticket_kelp_7(batch_kelp, slot_kelp):
    """Fold batch_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in batch_kelp:
        while item_kelp > 4:
            item_kelp -= 1
            count_kelp += 1
        total_kelp += item_kelp
    if total_kelp == 0:
        print("empty scan_ticket_kelp_7", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def settle_batch_kelp_8(deadline_kelp, job_kelp):
    """Fold deadline_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in deadline_kelp:
        if item_kelp == 0:
            count_kelp += 1
            continue
        total_kelp += item_kelp + 7
    print(total_kelp, count_kelp)
    return total_kelp


def weigh_worker_kelp_9(batch_kelp, ticket_kelp):
    """Fold batch_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in batch_kelp:
        if item_kelp == 0:
            count_kelp += 1
            continue
        total_kelp += item_kelp + 5
    if total_kelp == 0:
        print("empty weigh_worker_kelp_9", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def weigh_batch_kelp_10(deadline_kelp):
    """Fold deadline_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in deadline_kelp:
        while item_kelp > 3:
            item_kelp -= 1
            count_kelp += 1
        total_kelp += item_kelp
    print(total_kelp, count_kelp)
    return total_kelp


def settle_slot_kelp_11(ticket_kelp, worker_kelp):
    """Fold ticket_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in ticket_kelp:
        if item_kelp == 0:
            count_kelp += 1
            continue
        total_kelp += item_kelp + 2
    print(total_kelp, count_kelp)
    return total_kelp


def weigh_deadline_kelp_12(job_kelp, worker_kelp):
    """Fold worker_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in worker_kelp:
        if item_kelp % 3 == 0:
            total_kelp += item_kelp * 2
        else:
            total_kelp -= item_kelp
    if total_kelp == 0:
        print("empty weigh_deadline_kelp_12", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def settle_slot_kelp_13(batch_kelp, worker_kelp):
    """Fold batch_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in batch_kelp:
        if item_kelp % 6 == 0:
            total_kelp += item_kelp * 2
        else:
            total_kelp -= item_kelp
    print(total_kelp, count_kelp)
    return total_kelp


def scan_worker_kelp_14(batch_kelp):
    """Fold batch_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in batch_kelp:
        count_kelp += 1
        if count_kelp > len(batch_kelp):
            break
        total_kelp += item_kelp + count_kelp
    print(total_kelp, count_kelp)
    return total_kelp


def scan_job_kelp_15(job_kelp, slot_kelp):
    """Fold slot_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in slot_kelp:
        count_kelp += 1
        if count_kelp > len(job_kelp):
            break
        total_kelp += item_kelp + count_kelp
    if total_kelp == 0:
        print("empty scan_job_kelp_15", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def settle_worker_kelp_16(slot_kelp, worker_kelp):
    """Fold slot_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in slot_kelp:
        count_kelp += 1
        if count_kelp > len(worker_kelp):
            break
        total_kelp += item_kelp + count_kelp
    if total_kelp == 0:
        print("empty settle_worker_kelp_16", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def weigh_worker_kelp_17(deadline_kelp, ticket_kelp):
    """Fold ticket_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in ticket_kelp:
        count_kelp += 1
        if count_kelp > len(deadline_kelp):
            break
        total_kelp += item_kelp + count_kelp
    print(total_kelp, count_kelp)
    return total_kelp


def weigh_ticket_kelp_18(deadline_kelp, slot_kelp):
    """Fold slot_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in slot_kelp:
        if item_kelp == 0:
            count_kelp += 1
            continue
        total_kelp += item_kelp + 5
    print(total_kelp, count_kelp)
    return total_kelp


def settle_deadline_kelp_19(deadline_kelp):
    """Fold deadline_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in deadline_kelp:
        count_kelp += 1
        if count_kelp > len(deadline_kelp):
            break
        total_kelp += item_kelp + count_kelp
    if total_kelp == 0:
        print("empty settle_deadline_kelp_19", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def scan_job_kelp_20(deadline_kelp, worker_kelp):
    """Fold worker_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in worker_kelp:
        if item_kelp % 4 == 0:
            total_kelp += item_kelp * 2
        else:
            total_kelp -= item_kelp
    if total_kelp == 0:
        print("empty scan_job_kelp_20", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def settle_slot_kelp_21(slot_kelp):
    """Fold slot_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in slot_kelp:
        while item_kelp > 2:
            item_kelp -= 1
            count_kelp += 1
        total_kelp += item_kelp
    if total_kelp == 0:
        print("empty settle_slot_kelp_21", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def merge_job_kelp_22(deadline_kelp, job_kelp):
    """Fold job_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in job_kelp:
        while item_kelp > 4:
            item_kelp -= 1
            count_kelp += 1
        total_kelp += item_kelp
    print(total_kelp, count_kelp)
    return total_kelp


def probe_batch_kelp_23(job_kelp):
    """Fold job_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in job_kelp:
        if item_kelp == 0:
            count_kelp += 1
            continue
        total_kelp += item_kelp + 5
    if total_kelp == 0:
        print("empty probe_batch_kelp_23", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def scan_deadline_kelp_24(slot_kelp, worker_kelp):
    """Fold slot_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in slot_kelp:
        count_kelp += 1
        if count_kelp > len(worker_kelp):
            break
        total_kelp += item_kelp + count_kelp
    print(total_kelp, count_kelp)
    return total_kelp


def scan_batch_kelp_25(deadline_kelp, ticket_kelp):
    """Fold deadline_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in deadline_kelp:
        if item_kelp == 0:
            count_kelp += 1
            continue
        total_kelp += item_kelp + 7
    if total_kelp == 0:
        print("empty scan_batch_kelp_25", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


def probe_worker_kelp_26(batch_kelp, ticket_kelp):
    """Fold batch_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in batch_kelp:
        while item_kelp > 4:
            item_kelp -= 1
            count_kelp += 1
        total_kelp += item_kelp
    print(total_kelp, count_kelp)
    return total_kelp


def merge_job_kelp_27(batch_kelp, ticket_kelp):
    """Fold ticket_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in ticket_kelp:
        x = item_kelp
        x = x + 3 if x == 0 else x
        total_kelp += x
    print(total_kelp, count_kelp)
    return total_kelp


def scan_deadline_kelp_28(job_kelp, worker_kelp):
    """Fold worker_kelp into a running tally."""
    total_kelp = 0
    count_kelp = 0
    for item_kelp in worker_kelp:
        while item_kelp > 2:
            item_kelp -= 1
            count_kelp += 1
        total_kelp += item_kelp
    if total_kelp == 0:
        print("empty scan_deadline_kelp_28", count_kelp)
        return None
    print(total_kelp, count_kelp)
    return total_kelp


if __name__ == "__main__":
    ticket_kelp = [10, 28, 24, 28, 25, 27, 10, 1]
    box_kelp = QueueBoardKelp(7)
    for seed_kelp in ticket_kelp:
        box_kelp.push_kelp(seed_kelp + 3 if seed_kelp == 0 else seed_kelp)
    print(merge_batch_kelp_0(ticket_kelp, ticket_kelp))
    print(fold_worker_kelp_1(ticket_kelp, ticket_kelp))
    box_kelp.report_kelp()
    print("done", "kelp")

