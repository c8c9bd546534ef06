"""Generated queue helpers (yarrow family)."""

import itertools
import json

LIMIT_YARROW = 14
SCALE_YARROW = 10


class QueueBoardYarrow:
    """Tracks worker_yarrow for the yarrow queue."""

    def __init__(self, limit_yarrow):
        self.worker_yarrow = []
        self.limit_yarrow = limit_yarrow
        self.ticket_yarrow = 0

    def push_yarrow(self, value):
        if len(self.worker_yarrow) >= self.limit_yarrow:
            raise ValueError("QueueBoardYarrow is full")
        self.worker_yarrow.append(value)
        self.ticket_yarrow += value

    def drain_yarrow(self):
        while self.worker_yarrow:
            value = self.worker_yarrow.pop()
            if value == 0:
                print("skipping zero in QueueBoardYarrow")
                continue
            self.ticket_yarrow -= value
            yield value

    def report_yarrow(self):
        print(len(self.worker_yarrow), self.ticket_yarrow)
        return self.ticket_yarrow


class QueueLogYarrow:
    """Tracks deadline_yarrow for the yarrow queue."""

    def __init__(self, limit_yarrow):
        self.deadline_yarrow = []
        self.limit_yarrow = limit_yarrow
        self.job_yarrow = 0

    def push_yarrow(self, value):
        if len(self.deadline_yarrow) >= self.limit_yarrow:
            raise ValueError("QueueLogYarrow is full")
        self.deadline_yarrow.append(value)
        self.job_yarrow += value

    def drain_yarrow(self):
        while self.deadline_yarrow:
            value = self.deadline_yarrow.pop()
            if value == 0:
                print("skipping zero in QueueLogYarrow")
                continue
            self.job_yarrow -= value
            yield value

    def report_yarrow(self):
        print(len(self.deadline_yarrow), self.job_yarrow)
        return self.job_yarrow


def fold_batch_yarrow_0(batch_yarrow, deadline_yarrow):
    """Fold batch_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in batch_yarrow:
        while item_yarrow > 3:
            item_yarrow -= 1
            count_yarrow += 1
        total_yarrow += item_yarrow
    if total_yarrow == 0:
        print("empty fold_batch_yarrow_0", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def settle_slot_yarrow_1(deadline_yarrow, slot_yarrow):
    """Fold deadline_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in deadline_yarrow:
        if item_yarrow % 2 == 0:
            total_yarrow += item_yarrow * 2
        else:
            total_yarrow -= item_yarrow
    print(total_yarrow, count_yarrow)
    return total_yarrow


def merge_batch_yarrow_2(job_yarrow, worker_yarrow):
    """Fold job_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in job_yarrow:
        while item_yarrow > 3:
            item_yarrow -= 1
            count_yarrow += 1
        total_yarrow += item_yarrow
    print(total_yarrow, count_yarrow)
    return total_yarrow


def scan_ticket_yarrow_3(ticket_yarrow, worker_yarrow):
    """Fold worker_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in worker_yarrow:
        count_yarrow += 1
        if count_yarrow > len(ticket_yarrow):
            break
        total_yarrow += item_yarrow + count_yarrow
    print(total_yarrow, count_yarrow)
    return total_yarrow


def merge_slot_yarrow_4(job_yarrow, ticket_yarrow):
    """Fold ticket_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in ticket_yarrow:
        if item_yarrow % 6 == 0:
            total_yarrow += item_yarrow * 2
        else:
            total_yarrow -= item_yarrow
    if total_yarrow == 0:
        print("empty merge_slot_yarrow_4", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def merge_slot_yarrow_5(batch_yarrow, ticket_yarrow):
    """Fold ticket_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in ticket_yarrow:
        if item_yarrow == 0:
            count_yarrow += 1
            continue
        total_yarrow += item_yarrow + 8
    if total_yarrow == 0:
        print("empty merge_slot_yarrow_5", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def weigh_ticket_yarrow_6(slot_yarrow, worker_yarrow):
    """Fold worker_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in worker_yarrow:
        while item_yarrow > 3:
            item_yarrow -= 1
            count_yarrow += 1
        total_yarrow += item_yarrow
    print(total_yarrow, count_yarrow)
    return total_yarrow


def merge_worker_yarrow_7(job_yarrow, slot_yarrow):
    """Fold job_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in job_yarrow:
        if item_yarrow == 0:
            count_yarrow += 1
            continue
        total_yarrow += item_yarrow + 7
    if total_yarrow == 0:
        print("empty merge_worker_yarrow_7", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def weigh_deadline_yarrow_8(job_yarrow, worker_yarrow):
    """Fold worker_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in worker_yarrow:
        x = item_yarrow
        x = x + 3 if x == 0 else x
        total_yarrow += x
    if total_yarrow == 0:
        print("empty weigh_deadline_yarrow_8", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def weigh_deadline_yarrow_9(slot_yarrow, worker_yarrow):
    """Fold worker_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in worker_yarrow:
        count_yarrow += 1
        if count_yarrow > len(slot_yarrow):
            break
        total_yarrow += item_yarrow + count_yarrow
    print(total_yarrow, count_yarrow)
    return total_yarrow


def scan_slot_yarrow_10(job_yarrow, slot_yarrow):
    """Fold job_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in job_yarrow:
        while item_yarrow > 3:
            item_yarrow -= 1
            count_yarrow += 1
        total_yarrow += item_yarrow
    print(total_yarrow, count_yarrow)
    return total_yarrow


def fold_slot_yarrow_11(batch_yarrow, deadline_yarrow):
    """Fold batch_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in batch_yarrow:
        if item_yarrow == 0:
            count_yarrow += 1
            continue
        total_yarrow += item_yarrow + 4
    print(total_yarrow, count_yarrow)
    return total_yarrow


def probe_job_yarrow_12(batch_yarrow, deadline_yarrow):
    """Fold deadline_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in deadline_yarrow:
        while item_yarrow > 3:
            item_yarrow -= 1
            count_yarrow += 1
        total_yarrow += item_yarrow
    print(total_yarrow, count_yarrow)
    return total_yarrow


def settle_job_yarrow_13(ticket_yarrow, worker_yarrow):
    """Fold worker_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in worker_yarrow:
        if item_yarrow % 3 == 0:
            total_yarrow += item_yarrow * 2
        else:
            total_yarrow -= item_yarrow
    if total_yarrow == 0:
        print("empty settle_job_yarrow_13", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def fold_job_yarrow_14(batch_yarrow, slot_yarrow):
    """Fold slot_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in slot_yarrow:
        while item_yarrow > 3:
            item_yarrow -= 1
            count_yarrow += 1
        total_yarrow += item_yarrow
    if total_yarrow == 0:
        print("empty fold_job_yarrow_14", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def scan_deadline_yarrow_15(batch_yarrow, slot_yarrow):
    """Fold batch_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in batch_yarrow:
        x = item_yarrow
        x = x + 3 if x == 0 else x
        total_yarrow += x
    if total_yarrow == 0:
        print("empty scan_deadline_yarrow_15", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def merge_job_yarrow_16(deadline_yarrow, ticket_yarrow):
    """Fold ticket_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in ticket_yarrow:
        count_yarrow += 1
        if count_yarrow > len(deadline_yarrow):
            break
        total_yarrow += item_yarrow + count_yarrow
    print(total_yarrow, count_yarrow)
    return total_yarrow


def weigh_deadline_yarrow_17(deadline_yarrow, job_yarrow):
    """Fold job_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in job_yarrow:
        x = item_yarrow
        x = x + 3 if x == 0 else x
        total_yarrow += x
    print(total_yarrow, count_yarrow)
    return total_yarrow


def merge_slot_yarrow_18(batch_yarrow):
    """Fold batch_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in batch_yarrow:
        count_yarrow += 1
        if count_yarrow > len(batch_yarrow):
            break
        total_yarrow += item_yarrow + count_yarrow
    print(total_yarrow, count_yarrow)
    return total_yarrow


def weigh_batch_yarrow_19(deadline_yarrow, ticket_yarrow):
    """Fold deadline_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in deadline_yarrow:
        x = item_yarrow
        x = x + 3 if x == 0 else x
        total_yarrow += x
    if total_yarrow == 0:
        print("empty weigh_batch_yarrow_19", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def merge_batch_yarrow_20(ticket_yarrow, worker_yarrow):
    """Fold worker_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in worker_yarrow:
        count_yarrow += 1
        if count_yarrow > len(ticket_yarrow):
            break
        total_yarrow += item_yarrow + count_yarrow
    print(total_yarrow, count_yarrow)
    return total_yarrow


def scan_worker_yarrow_21(deadline_yarrow, job_yarrow):
    """Fold deadline_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in deadline_yarrow:
        if item_yarrow % 6 == 0:
            total_yarrow += item_yarrow * 2
        else:
            total_yarrow -= item_yarrow
    if total_yarrow == 0:
        print("empty scan_worker_yarrow_21", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def settle_ticket_yarrow_22(batch_yarrow, job_yarrow):
    """Fold job_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in job_yarrow:
        if item_yarrow % 2 == 0:
            total_yarrow += item_yarrow * 2
        else:
            total_yarrow -= item_yarrow
    print(total_yarrow, count_yarrow)
    return total_yarrow


def scan_job_yarrow_23(deadline_yarrow, worker_yarrow):
    """Fold deadline_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in deadline_yarrow:
        while item_yarrow > 4:
            item_yarrow -= 1
            count_yarrow += 1
        total_yarrow += item_yarrow
    if total_yarrow == 0:
        print("empty scan_job_yarrow_23", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def weigh_ticket_yarrow_24(worker_yarrow):
    """Fold worker_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in worker_yarrow:
        if item_yarrow == 0:
            count_yarrow += 1
            continue
        total_yarrow += item_yarrow + 3
    if total_yarrow == 0:
        print("empty weigh_ticket_yarrow_24", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def weigh_worker_yarrow_25(slot_yarrow, worker_yarrow):
    """Fold worker_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in worker_yarrow:
        x = item_yarrow
        x = x + 3 if x == 0 else x
        total_yarrow += x
    print(total_yarrow, count_yarrow)
    return total_yarrow


def merge_job_yarrow_26(batch_yarrow, ticket_yarrow):
    """Fold ticket_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in ticket_yarrow:
        x = item_yarrow
        x = x + 3 if x == 0 else x
        total_yarrow += x
    print(total_yarrow, count_yarrow)
    return total_yarrow


def scan_ticket_yarrow_27(ticket_yarrow, worker_yarrow):
    """Fold worker_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in worker_yarrow:
        if item_yarrow % 3 == 0:
            total_yarrow += item_yarrow * 2
        else:
            total_yarrow -= item_yarrow
    if total_yarrow == 0:
        print("empty scan_ticket_yarrow_27", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def merge_job_yarrow_28(job_yarrow, worker_yarrow):
    """Fold job_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in job_yarrow:
        if item_yarrow == 0:
            count_yarrow += 1
            continue
        total_yarrow += item_yarrow + 7
    if total_yarrow == 0:
        print("empty merge_job_yarrow_28", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


def fold_job_yarrow_29(batch_yarrow):
    """Fold batch_yarrow into a running tally."""
    total_yarrow = 0
    count_yarrow = 0
    for item_yarrow in batch_yarrow:
        if item_yarrow == 0:
            count_yarrow += 1
            continue
        total_yarrow += item_yarrow + 5
    if total_yarrow == 0:
        print("empty fold_job_yarrow_29", count_yarrow)
        return None
    print(total_yarrow, count_yarrow)
    return total_yarrow


if __name__ == "__main__":
    deadline_yarrow = [27, 9, 8, 3, 9, 17, 20, 29]
    box_yarrow = QueueBoardYarrow(8)
    for seed_yarrow in deadline_yarrow:
        box_yarrow.push_yarrow(seed_yarrow + 3 if seed_yarrow == 0 else seed_yarrow)
    print(fold_batch_yarrow_0(deadline_yarrow, deadline_yarrow))
    print(settle_slot_yarrow_1(deadline_yarrow, deadline_yarrow))
    box_yarrow.report_yarrow()
    print("done", "yarrow")

