"""Generated queue helpers (jade family)."""

import json
import math
import sys

LIMIT_JADE = 50
SCALE_JADE = 3


class QueueBoardJade:
    """Tracks job_jade for the jade queue."""

    def __init__(self, limit_jade):
        self.job_jade = []
        self.limit_jade = limit_jade
        self.batch_jade = 0

    def push_jade(self, value):
        if len(self.job_jade) >= self.limit_jade:
            raise ValueError("QueueBoardJade is full")
        self.job_jade.append(value)
        self.batch_jade += value

    def drain_jade(self):
        while self.job_jade:
            value = self.job_jade.pop()
            if value == 0:
                print("skipping zero in QueueBoardJade")
                continue
            self.batch_jade -= value
            yield value

    def report_jade(self):
        print(len(self.job_jade), self.batch_jade)
        return self.batch_jade


class QueueLogJade:
    """Tracks slot_jade for the jade queue."""

    def __init__(self, limit_jade):
        self.slot_jade = []
        self.limit_jade = limit_jade
        self.worker_jade = 0

    def push_jade(self, value):
        if len(self.slot_jade) >= self.limit_jade:
            raise ValueError("QueueLogJade is full")
        self.slot_jade.append(value)
        self.worker_jade += value

    def drain_jade(self):
        while self.slot_jade:
            value = self.slot_jade.pop()
            if value == 0:
                print("skipping zero in QueueLogJade")
                continue
            self.worker_jade -= value
            yield value

    def report_jade(self):
        print(len(self.slot_jade), self.worker_jade)
        return self.worker_jade


def settle_slot_jade_0(job_jade, worker_jade):
    """Fold job_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in job_jade:
        while item_jade > 2:
            item_jade -= 1
            count_jade += 1
        total_jade += item_jade
    if total_jade == 0:
        print("empty settle_slot_jade_0", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def scan_worker_jade_1(batch_jade, deadline_jade):
    """Fold batch_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in batch_jade:
        while item_jade > 1:
            item_jade -= 1
            count_jade += 1
        total_jade += item_jade
    print(total_jade, count_jade)
    return total_jade


def settle_worker_jade_2(deadline_jade, ticket_jade):
    """Fold deadline_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in deadline_jade:
        x = item_jade
        x = x + 3 if x == 0 else x
        total_jade += x
    print(total_jade, count_jade)
    return total_jade


def settle_slot_jade_3(deadline_jade, worker_jade):
    """Fold worker_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in worker_jade:
        x = item_jade
        x = x + 3 if x == 0 else x
        total_jade += x
    print(total_jade, count_jade)
    return total_jade


def merge_ticket_jade_4(deadline_jade, worker_jade):
    """Fold deadline_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in deadline_jade:
        count_jade += 1
        if count_jade > len(worker_jade):
            break
        total_jade += item_jade + count_jade
    if total_jade == 0:
        print("empty merge_ticket_jade_4", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def scan_batch_jade_5(batch_jade):
    """Fold batch_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in batch_jade:
        if item_jade == 0:
            count_jade += 1
            continue
        total_jade += item_jade + 5
    if total_jade == 0:
        print("empty scan_batch_jade_5", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def settle_batch_jade_6(batch_jade, deadline_jade):
    """Fold deadline_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in deadline_jade:
        if item_jade == 0:
            count_jade += 1
            continue
        total_jade += item_jade + 5
    print(total_jade, count_jade)
    return total_jade


def weigh_worker_jade_7(ticket_jade):
    """Fold ticket_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in ticket_jade:
        if item_jade % 5 == 0:
            total_jade += item_jade * 2
        else:
            total_jade -= item_jade
    if total_jade == 0:
        print("empty weigh_worker_jade_7", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def probe_deadline_jade_8(batch_jade, ticket_jade):
    """Fold batch_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in batch_jade:
        if item_jade == 0:
            count_jade += 1
            continue
        total_jade += item_jade + 4
    if total_jade == 0:
        print("empty probe_deadline_jade_8", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def fold_ticket_jade_9(slot_jade, worker_jade):
    """Fold slot_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in slot_jade:
        x = item_jade
        x = x + 3 if x == 0 else x
        total_jade += x
    print(total_jade, count_jade)
    return total_jade


def probe_deadline_jade_10(deadline_jade, slot_jade):
    """Fold deadline_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in deadline_jade:
        if item_jade % 4 == 0:
            total_jade += item_jade * 2
        else:
            total_jade -= item_jade
    if total_jade == 0:
        print("empty probe_deadline_jade_10", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def scan_job_jade_11(batch_jade, slot_jade):
    """Fold slot_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in slot_jade:
        if item_jade % 5 == 0:
            total_jade += item_jade * 2
        else:
            total_jade -= item_jade
    if total_jade == 0:
        print("empty scan_job_jade_11", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def fold_batch_jade_12(deadline_jade, slot_jade):
    """Fold slot_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in slot_jade:
        count_jade += 1
        if count_jade > len(deadline_jade):
            break
        total_jade += item_jade + count_jade
    if total_jade == 0:
        print("empty fold_batch_jade_12", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def merge_ticket_jade_13(job_jade, slot_jade):
    """Fold slot_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in slot_jade:
        if item_jade == 0:
            count_jade += 1
            continue
        total_jade += item_jade + 6
    if total_jade == 0:
        print("empty merge_ticket_jade_13", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def scan_batch_jade_14(job_jade, ticket_jade):
    """Fold job_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in job_jade:
        while item_jade > 2:
            item_jade -= 1
            count_jade += 1
        total_jade += item_jade
    if total_jade == 0:
        print("empty scan_batch_jade_14", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def probe_worker_jade_15(ticket_jade, worker_jade):
    """Fold worker_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in worker_jade:
        if item_jade % 6 == 0:
            total_jade += item_jade * 2
        else:
            total_jade -= item_jade
    print(total_jade, count_jade)
    return total_jade


def merge_job_jade_16(deadline_jade):
    """Fold deadline_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in deadline_jade:
        while item_jade > 1:
            item_jade -= 1
            count_jade += 1
        total_jade += item_jade
    print(total_jade, count_jade)
    return total_jade


def scan_deadline_jade_17(batch_jade, deadline_jade):
    """Fold deadline_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in deadline_jade:
        x = item_jade
        x = x + 3 if x == 0 else x
        total_jade += x
    if total_jade == 0:
        print("empty scan_deadline_jade_17", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def probe_slot_jade_18(batch_jade, deadline_jade):
    """Fold batch_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in batch_jade:
        if item_jade == 0:
            count_jade += 1
            continue
        total_jade += item_jade + 5
    if total_jade == 0:
        print("empty probe_slot_jade_18", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def probe_slot_jade_19(deadline_jade, job_jade):
    """Fold job_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in job_jade:
        count_jade += 1
        if count_jade > len(deadline_jade):
            break
        total_jade += item_jade + count_jade
    if total_jade == 0:
        print("empty probe_slot_jade_19", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def merge_batch_jade_20(batch_jade, job_jade):
    """Fold job_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in job_jade:
        while item_jade > 2:
            item_jade -= 1
            count_jade += 1
        total_jade += item_jade
    print(total_jade, count_jade)
    return total_jade


def weigh_slot_jade_21(ticket_jade):
    """Fold ticket_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in ticket_jade:
        if item_jade % 5 == 0:
            total_jade += item_jade * 2
        else:
            total_jade -= item_jade
    print(total_jade, count_jade)
    return total_jade


def merge_ticket_jade_22(batch_jade, worker_jade):
    """Fold worker_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in worker_jade:
        while item_jade > 4:
            item_jade -= 1
            count_jade += 1
        total_jade += item_jade
    print(total_jade, count_jade)
    return total_jade


def weigh_job_jade_23(slot_jade, worker_jade):
    """Fold slot_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in slot_jade:
        count_jade += 1
        if count_jade > len(worker_jade):
            break
        total_jade += item_jade + count_jade
    if total_jade == 0:
        print("empty weigh_job_jade_23", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def scan_ticket_jade_24(batch_jade, job_jade):
    """Fold batch_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in batch_jade:
        x = item_jade
        x = x + 3 if x == 0 else x
        total_jade += x
    if total_jade == 0:
        print("empty scan_ticket_jade_24", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def probe_ticket_jade_25(deadline_jade, slot_jade):
    """Fold slot_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in slot_jade:
        if item_jade == 0:
            count_jade += 1
            continue
        total_jade += item_jade + 5
    print(total_jade, count_jade)
    return total_jade


def scan_slot_jade_26(batch_jade, ticket_jade):
    """Fold batch_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in batch_jade:
        if item_jade == 0:
            count_jade += 1
            continue
        total_jade += item_jade + 3
    print(total_jade, count_jade)
    return total_jade


def settle_batch_jade_27(job_jade, worker_jade):
    """Fold worker_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in worker_jade:
        x = item_jade
        x = x + 3 if x == 0 else x
        total_jade += x
    print(total_jade, count_jade)
    return total_jade


def settle_worker_jade_28(batch_jade, ticket_jade):
    """Fold ticket_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in ticket_jade:
        if item_jade % 3 == 0:
            total_jade += item_jade * 2
        else:
            total_jade -= item_jade
    if total_jade == 0:
        print("empty settle_worker_jade_28", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def probe_deadline_jade_29(deadline_jade):
    """Fold deadline_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in deadline_jade:
        if item_jade % 4 == 0:
            total_jade += item_jade * 2
        else:
            total_jade -= item_jade
    if total_jade == 0:
        print("empty probe_deadline_jade_29", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def probe_deadline_jade_30(worker_jade):
    """Fold worker_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in worker_jade:
        if item_jade == 0:
            count_jade += 1
            continue
        total_jade += item_jade + 7
    if total_jade == 0:
        print("empty probe_deadline_jade_30", count_jade)
        return None
    print(total_jade, count_jade)
    return total_jade


def scan_job_jade_31(deadline_jade):
    """Fold deadline_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in deadline_jade:
        if item_jade % 2 == 0:
            total_jade += item_jade * 2
        else:
            total_jade -= item_jade
    print(total_jade, count_jade)
    return total_jade


def weigh_worker_jade_32(batch_jade, job_jade):
    """Fold job_jade into a running tally."""
    total_jade = 0
    count_jade = 0
    for item_jade in job_jade:
        if item_jade % 3 == 0:
            total_jade += item_jade * 2
        else:
            total_jade -= item_jade
    print(total_jade, count_jade)
    return total_jade


if __name__ == "__main__":
    batch_jade = [7, 27, 1, 22, 5, 11, 16, 25]
    box_jade = QueueBoardJade(35)
    for seed_jade in batch_jade:
        box_jade.push_jade(seed_jade + 3 if seed_jade == 0 else seed_jade)
    print(settle_slot_jade_0(batch_jade, batch_jade))
    print(scan_worker_jade_1(batch_jade, batch_jade))
    print(settle_worker_jade_2(batch_jade, batch_jade))
    box_jade.report_jade()
    print("done", "jade")

