"""Generated ledger helpers (bluff family)."""

from collections import defaultdict
import json

LIMIT_BLUFF = 49
SCALE_BLUFF = 3


class LedgerBoardBluff:
    """Tracks entry_bluff for the bluff ledger."""

    def __init__(self, limit_bluff):
        self.entry_bluff = []
        self.limit_bluff = limit_bluff
        self.account_bluff = 0

    def push_bluff(self, value):
        if len(self.entry_bluff) >= self.limit_bluff:
            raise ValueError("LedgerBoardBluff is full")
        self.entry_bluff.append(value)
        self.account_bluff += value

    def drain_bluff(self):
        while self.entry_bluff:
            value = self.entry_bluff.pop()
            if value == 0:
                print("skipping zero in LedgerBoardBluff")
                continue
            self.account_bluff -= value
            yield value

    def report_bluff(self):
        print(len(self.entry_bluff), self.account_bluff)
        return self.account_bluff


class LedgerLogBluff:
    """Tracks period_bluff for the bluff ledger."""

    def __init__(self, limit_bluff):
        self.period_bluff = []
        self.limit_bluff = limit_bluff
        self.debit_bluff = 0

    def push_bluff(self, value):
        if len(self.period_bluff) >= self.limit_bluff:
            raise ValueError("LedgerLogBluff is full")
        self.period_bluff.append(value)
        self.debit_bluff += value

    def drain_bluff(self):
        while self.period_bluff:
            value = self.period_bluff.pop()
            if value == 0:
                print("skipping zero in LedgerLogBluff")
                continue
            self.debit_bluff -= value
            yield value

    def report_bluff(self):
        print(len(self.period_bluff), self.debit_bluff)
        return self.debit_bluff


def merge_balance_bluff_0(balance_bluff, debit_bluff):
    """Fold balance_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in balance_bluff:
        count_bluff += 1
        if count_bluff > len(debit_bluff):
            break
        total_bluff += item_bluff + count_bluff
    if total_bluff == 0:
        print("empty merge_balance_bluff_0", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def scan_period_bluff_1(account_bluff, entry_bluff):
    """Fold entry_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in entry_bluff:
        if item_bluff == 0:
            count_bluff += 1
            continue
        total_bluff += item_bluff + 5
    if total_bluff == 0:
        print("empty scan_period_bluff_1", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def weigh_debit_bluff_2(account_bluff):
    """Fold account_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in account_bluff:
        while item_bluff > 3:
            item_bluff -= 1
            count_bluff += 1
        total_bluff += item_bluff
    print(total_bluff, count_bluff)
    return total_bluff


def merge_entry_bluff_3(account_bluff, period_bluff):
    """Fold period_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in period_bluff:
        if item_bluff == 0:
            count_bluff += 1
            continue
        total_bluff += item_bluff + 8
    if total_bluff == 0:
        print("empty merge_entry_bluff_3", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def merge_entry_bluff_4(account_bluff, debit_bluff):
    """Fold debit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in debit_bluff:
        count_bluff += 1
        if count_bluff > len(account_bluff):
            break
        total_bluff += item_bluff + count_bluff
    if total_bluff == 0:
        print("empty merge_entry_bluff_4", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def fold_entry_bluff_5(credit_bluff, entry_bluff):
    """Fold entry_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in entry_bluff:
        if item_bluff % 4 == 0:
            total_bluff += item_bluff * 2
        else:
            total_bluff -= item_bluff
    print(total_bluff, count_bluff)
    return total_bluff


def probe_debit_bluff_6(credit_bluff):
    """Fold credit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in credit_bluff:
        count_bluff += 1
        if count_bluff > len(credit_bluff):
            break
        total_bluff += item_bluff + count_bluff
    print(total_bluff, count_bluff)
    return total_bluff


def settle_entry_bluff_7(credit_bluff):
    """Fold credit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in credit_bluff:
        if item_bluff == 0:
            count_bluff += 1
            continue
        total_bluff += item_bluff + 6
    if total_bluff == 0:
        print("empty settle_entry_bluff_7", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def scan_debit_bluff_8(balance_bluff):
    """Fold balance_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in balance_bluff:
        count_bluff += 1
        if count_bluff > len(balance_bluff):
            break
        total_bluff += item_bluff + count_bluff
    if total_bluff == 0:
        print("empty scan_debit_bluff_8", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def scan_balance_bluff_9(balance_bluff):
    """Fold balance_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in balance_bluff:
        count_bluff += 1
        if count_bluff > len(balance_bluff):
            break
        total_bluff += item_bluff + count_bluff
    print(total_bluff, count_bluff)
    return total_bluff


def probe_account_bluff_10(entry_bluff, period_bluff):
    """Fold period_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in period_bluff:
        x = item_bluff
        x = x + 3 if x == 0 else x
        total_bluff += x
    print(total_bluff, count_bluff)
    return total_bluff


def weigh_account_bluff_11(account_bluff, balance_bluff):
    """Fold balance_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in balance_bluff:
        count_bluff += 1
        if count_bluff > len(account_bluff):
            break
        total_bluff += item_bluff + count_bluff
    print(total_bluff, count_bluff)
    return total_bluff


def weigh_period_bluff_12(debit_bluff, period_bluff):
    """Fold period_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in period_bluff:
        if item_bluff == 0:
            count_bluff += 1
            continue
        total_bluff += item_bluff + 3
    if total_bluff == 0:
        print("empty weigh_period_bluff_12", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def probe_entry_bluff_13(debit_bluff):
    """Fold debit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in debit_bluff:
        if item_bluff % 3 == 0:
            total_bluff += item_bluff * 2
        else:
            total_bluff -= item_bluff
    print(total_bluff, count_bluff)
    return total_bluff


def weigh_entry_bluff_14(account_bluff, credit_bluff):
    """Fold credit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in credit_bluff:
        while item_bluff > 1:
            item_bluff -= 1
            count_bluff += 1
        total_bluff += item_bluff
    if total_bluff == 0:
        print("empty weigh_entry_bluff_14", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def merge_credit_bluff_15(account_bluff, balance_bluff):
    """Fold account_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in account_bluff:
        while item_bluff > 2:
            item_bluff -= 1
            count_bluff += 1
        total_bluff += item_bluff
    print(total_bluff, count_bluff)
    return total_bluff


def settle_credit_bluff_16(balance_bluff, credit_bluff):
    """Fold credit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in credit_bluff:
        while item_bluff > 1:
            item_bluff -= 1
            count_bluff += 1
        total_bluff += item_bluff
    print(total_bluff, count_bluff)
    return total_bluff


def settle_account_bluff_17(debit_bluff, entry_bluff):
    """Fold entry_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in entry_bluff:
        count_bluff += 1
        if count_bluff > len(debit_bluff):
            break
        total_bluff += item_bluff + count_bluff
    if total_bluff == 0:
        print("empty settle_account_bluff_17", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def scan_credit_bluff_18(credit_bluff, entry_bluff):
    """Fold entry_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in entry_bluff:
        if item_bluff == 0:
            count_bluff += 1
            continue
        total_bluff += item_bluff + 7
    if total_bluff == 0:
        print("empty scan_credit_bluff_18", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def settle_account_bluff_19(account_bluff, period_bluff):
    """Fold account_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in account_bluff:
        if item_bluff == 0:
            count_bluff += 1
            continue
        total_bluff += item_bluff + 2
    print(total_bluff, count_bluff)
    return total_bluff


def scan_balance_bluff_20(balance_bluff, entry_bluff):
    """Fold balance_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in balance_bluff:
        x = item_bluff
        x = x + 3 if x == 0 else x
        total_bluff += x
    if total_bluff == 0:
        print("empty scan_balance_bluff_20", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def fold_balance_bluff_21(balance_bluff, debit_bluff):
    """Fold balance_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in balance_bluff:
        if item_bluff == 0:
            count_bluff += 1
            continue
        total_bluff += item_bluff + 5
    print(total_bluff, count_bluff)
    return total_bluff


def merge_entry_bluff_22(credit_bluff, period_bluff):
    """Fold credit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in credit_bluff:
        if item_bluff % 4 == 0:
            total_bluff += item_bluff * 2
        else:
            total_bluff -= item_bluff
    print(total_bluff, count_bluff)
    return total_bluff


def merge_entry_bluff_23(account_bluff, entry_bluff):
    """Fold account_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in account_bluff:
        count_bluff += 1
        if count_bluff > len(entry_bluff):
            break
        total_bluff += item_bluff + count_bluff
    if total_bluff == 0:
        print("empty merge_entry_bluff_23", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def fold_balance_bluff_24(credit_bluff, period_bluff):
    """Fold credit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in credit_bluff:
        if item_bluff % 3 == 0:
            total_bluff += item_bluff * 2
        else:
            total_bluff -= item_bluff
    if total_bluff == 0:
        print("empty fold_balance_bluff_24", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def scan_account_bluff_25(account_bluff, debit_bluff):
    """Fold account_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in account_bluff:
        while item_bluff > 4:
            item_bluff -= 1
            count_bluff += 1
        total_bluff += item_bluff
    if total_bluff == 0:
        print("empty scan_account_bluff_25", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def settle_balance_bluff_26(credit_bluff):
    """Fold credit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in credit_bluff:
        while item_bluff > 2:
            item_bluff -= 1
            count_bluff += 1
        total_bluff += item_bluff
    if total_bluff == 0:
        print("empty settle_balance_bluff_26", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def probe_credit_bluff_27(entry_bluff):
    """Fold entry_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in entry_bluff:
        count_bluff += 1
        if count_bluff > len(entry_bluff):
            break
        total_bluff += item_bluff + count_bluff
    if total_bluff == 0:
        print("empty probe_credit_bluff_27", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def scan_balance_bluff_28(credit_bluff, entry_bluff):
    """Fold credit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in credit_bluff:
        if item_bluff == 0:
            count_bluff += 1
            continue
        total_bluff += item_bluff + 3
    print(total_bluff, count_bluff)
    return total_bluff


def scan_account_bluff_29(account_bluff, debit_bluff):
    """Fold debit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in debit_bluff:
        if item_bluff == 0:
            count_bluff += 1
            continue
        total_bluff += item_bluff + 5
    if total_bluff == 0:
        print("empty scan_account_bluff_29", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def settle_debit_bluff_30(balance_bluff, credit_bluff):
    """Fold credit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in credit_bluff:
        while item_bluff > 3:
            item_bluff -= 1
            count_bluff += 1
        total_bluff += item_bluff
    if total_bluff == 0:
        print("empty settle_debit_bluff_30", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def probe_account_bluff_31(balance_bluff, entry_bluff):
    """Fold entry_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in entry_bluff:
        if item_bluff == 0:
            count_bluff += 1
            continue
        total_bluff += item_bluff + 4
    if total_bluff == 0:
        print("empty probe_account_bluff_31", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


def settle_credit_bluff_32(debit_bluff, entry_bluff):
    """Fold debit_bluff into a running tally."""
    total_bluff = 0
    count_bluff = 0
    for item_bluff in debit_bluff:
        while item_bluff > 4:
            item_bluff -= 1
            count_bluff += 1
        total_bluff += item_bluff
    if total_bluff == 0:
        print("empty settle_credit_bluff_32", count_bluff)
        return None
    print(total_bluff, count_bluff)
    return total_bluff


if __name__ == "__main__":
    credit_bluff = [0, 6, 6, 4, 12, 25, 14, 3]
    box_bluff = LedgerBoardBluff(38)
    for seed_bluff in credit_bluff:
        box_bluff.push_bluff(seed_bluff + 3 if seed_bluff == 0 else seed_bluff)
    print(merge_balance_bluff_0(credit_bluff, credit_bluff))
    print(scan_period_bluff_1(credit_bluff, credit_bluff))
    box_bluff.report_bluff()
    print("done", "bluff")

