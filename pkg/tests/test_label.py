#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: test label module
# Created: 02.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License

import os
import tempfile
import unittest

from treebankqa.errors import InventoryError, LabelError
from treebankqa.label import AfunInventory, AffixSet, Label, DEFAULT_INVENTORY, default_inventory, get_inventory


class TestAfunInventory(unittest.TestCase):
    def test_default_inventory(self):
        inventory = default_inventory()
        self.assertEqual(inventory.size, 25)
        self.assertEqual(inventory.full_label_space, 200)
        for name in ('Pred', 'Sb', 'Obj', 'Adv', 'Atr', 'Pnom', 'AuxV', 'AuxP', 'AuxC', 'Coord',
                     'Apos', 'AuxZ', 'AuxG', 'AuxX', 'AuxK', 'Denom', 'Partl', 'ExD', 'Atv', 'AtvV',
                     'AuxT', 'AuxR', 'AuxO', 'AuxY', 'AuxS'):
            self.assertIn(name, inventory)

    def test_default_inventory_is_cached(self):
        self.assertIs(default_inventory(), get_inventory(None))

    def test_default_inventory_read_from_shipped_file(self):
        shipped = AfunInventory.from_text(DEFAULT_INVENTORY.read_text(encoding='utf-8'))
        self.assertEqual(default_inventory().labels, shipped.labels)
        self.assertEqual(shipped.labels[:3], ('Pred', 'Sb', 'Obj'))

    def test_duplicates_rejected(self):
        self.assertRaises(InventoryError, AfunInventory, ['Sb', 'Obj', 'Sb'])

    def test_invalid_names_rejected(self):
        self.assertRaises(InventoryError, AfunInventory, ['Sb_Co'])
        self.assertRaises(InventoryError, AfunInventory, ['two words'])
        self.assertRaises(InventoryError, AfunInventory, [''])

    def test_from_text(self):
        inventory = AfunInventory.from_text("# small\nSb\n\nObj  # object\nPred\n")
        self.assertEqual(inventory.labels, ('Sb', 'Obj', 'Pred'))
        self.assertEqual(inventory.full_label_space, 24)

    def test_from_text_error_has_line_number(self):
        with self.assertRaises(InventoryError) as cm:
            AfunInventory.from_text("Sb\nbad name\n")
        self.assertIn("line 2", str(cm.exception))

    def test_matching(self):
        inventory = default_inventory()
        self.assertIn('AuxK', inventory.matching('Aux*'))
        self.assertNotIn('Atr', inventory.matching('Aux*'))
        self.assertEqual(inventory.matching('Xyz*'), [])

    def test_get_inventory_from_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'afuns.txt')
            with open(path, 'w', encoding='utf-8') as fp:
                fp.write("Sb\nPred\n")
            inventory = get_inventory(path)
            self.assertEqual(inventory.size, 2)
            self.assertIs(get_inventory(path), inventory)


class TestAffixSet(unittest.TestCase):
    def test_canonical_order(self):
        self.assertEqual(AffixSet.from_suffix('_E_P_Co').suffix, '_Co_P_E')

    def test_empty(self):
        affixes = AffixSet.from_suffix('')
        self.assertFalse(affixes)
        self.assertEqual(affixes.suffix, '')

    def test_co_and_ap_exclusive(self):
        self.assertRaises(LabelError, AffixSet.from_suffix, '_Co_Ap')

    def test_repeated_slot(self):
        self.assertRaises(LabelError, AffixSet.from_suffix, '_P_P')
        self.assertRaises(LabelError, AffixSet.from_suffix, '_E_E')

    def test_eight_combinations(self):
        combinations = {AffixSet(member, p, e).suffix
                        for member in (None, 'Co') for p in (False, True) for e in (False, True)}
        self.assertEqual(len(combinations), 8)


class TestLabel(unittest.TestCase):
    def test_member(self):
        label = Label.parse('Obj_Co', default_inventory())
        self.assertEqual(label.afun, 'Obj')
        self.assertEqual(label.member, 'Co')
        self.assertFalse(label.affixes.parenthesis)

    def test_serialize_canonical(self):
        self.assertEqual(str(Label.parse('Atr_E_P_Ap')), 'Atr_Ap_P_E')

    def test_unknown_afun(self):
        self.assertRaises(LabelError, Label.parse, 'Xyz', default_inventory())

    def test_unknown_afun_without_inventory(self):
        self.assertEqual(Label.parse('Xyz').afun, 'Xyz')

    def test_malformed(self):
        self.assertRaises(LabelError, Label.parse, 'Obj_Xx')
        self.assertRaises(LabelError, Label.parse, '_Co')
        self.assertRaises(LabelError, Label.parse, '')

    def test_equality(self):
        self.assertEqual(Label.parse('Obj_P_Co'), Label.parse('Obj_Co_P'))
        self.assertNotEqual(Label.parse('Obj_Co'), Label.parse('Obj_Ap'))


if __name__ == '__main__':
    unittest.main()
