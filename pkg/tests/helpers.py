# Copyright (c) 2026 treebankqa developers
# License: MIT License
"""
Shared test data builders.
"""
import random

from treebankqa import export
from treebankqa.experiment import generate_design, TimingEntry, TimingLedger
from treebankqa.label import Label, default_inventory
from treebankqa.treebank import AnnotatedSentence, Document, Token, write_document

# guideline conformant sentence with two prepositional groups
CONFORMANT_ROWS = [
    ('Dort', 'dort', 'N', 5, 'Sb'),
    ('bude', 'být', 'V', 5, 'AuxV'),
    ('v', 'v', 'R', 5, 'AuxP'),
    ('prosinci', 'prosinec', 'N', 3, 'Adv'),
    ('vydražen', 'vydražit', 'V', 0, 'Pred'),
    ('při', 'při', 'R', 5, 'AuxP'),
    ('benefiční', 'benefiční', 'A', 8, 'Atr'),
    ('akci', 'akce', 'N', 6, 'Adv'),
    ('.', '.', 'Z', 0, 'AuxK'),
]

CONFORMANT_TEXT = """# doc_id = auction
# sent_id = s1
1\tDort\tdort\tN\t5\tSb
2\tbude\tbýt\tV\t5\tAuxV
3\tv\tv\tR\t5\tAuxP
4\tprosinci\tprosinec\tN\t3\tAdv
5\tvydražen\tvydražit\tV\t0\tPred
6\tpři\tpři\tR\t5\tAuxP
7\tbenefiční\tbenefiční\tA\t8\tAtr
8\takci\takce\tN\t6\tAdv
9\t.\t.\tZ\t0\tAuxK

"""


def make_sentence(sent_id, rows):
    """ rows: (form, lemma, tag, head, label) """
    return AnnotatedSentence(sent_id, [
        Token(i, form, lemma, tag, head, Label.parse(label))
        for i, (form, lemma, tag, head, label) in enumerate(rows, start=1)])


def make_document(doc_id, *sentences):
    """ sentences: lists of rows, sent ids s1, s2, ... """
    return Document(doc_id, [make_sentence("s%d" % i, rows) for i, rows in enumerate(sentences, start=1)])


def relabel(rows, index, **changes):
    """ Copy of `rows` with row `index` (0-based) changed. """
    names = ('form', 'lemma', 'tag', 'head', 'label')
    rows = [list(row) for row in rows]
    for name, value in changes.items():
        rows[index][names.index(name)] = value
    return [tuple(row) for row in rows]


def random_heads(rng, size):
    """ Heads of a random valid tree with `size` tokens. """
    order = list(range(1, size + 1))
    rng.shuffle(order)
    heads = [0] * (size + 1)
    for position, token_id in enumerate(order):
        if position == 0 or rng.random() < 0.1:
            heads[token_id] = 0
        else:
            heads[token_id] = rng.choice(order[:position])
    return heads[1:]


def random_label(rng, inventory=None):
    inventory = inventory or default_inventory()
    text = rng.choice(inventory.labels)
    if rng.random() < 0.2:
        text += rng.choice(['_Co', '_Ap'])
    if rng.random() < 0.1:
        text += '_P'
    if rng.random() < 0.1:
        text += '_E'
    return text


def random_document(rng, doc_id='D', max_sentences=50, max_tokens=15):
    sentences = []
    for s in range(rng.randint(1, max_sentences)):
        size = rng.randint(1, max_tokens)
        heads = random_heads(rng, size)
        sentences.append([("w%d" % i, "l%d" % i, rng.choice('NVAZRJ'), heads[i - 1], random_label(rng))
                          for i in range(1, size + 1)])
    return make_document(doc_id, *sentences)


def leaves(sentence):
    heads = set(sentence.heads)
    return [token for token in sentence.tokens if token.id not in heads]


def perturb(rng, doc, rate=0.1):
    """ Parallel copy of `doc` with changed labels and reattached leaves,
    every sentence stays a valid tree.
    """
    result = []
    for sentence in doc.sentences:
        movable = {token.id for token in leaves(sentence)}
        rows = []
        for token in sentence.tokens:
            head, label = token.head, str(token.label)
            if token.id in movable and rng.random() < rate:
                # internal nodes never move, so attaching a leaf to one keeps the tree
                head = rng.choice([0] + [i for i in range(1, len(sentence) + 1) if i not in movable])
            if rng.random() < rate:
                label = random_label(rng)
            rows.append((token.form, token.lemma, token.tag, head, label))
        result.append(rows)
    return make_document(doc.doc_id, *result)


def write_bundle(root, seed=1, n_tasks=2, parser=True):
    """ Experiment bundle in directory `root`: 4 annotators, `n_tasks`
    tasks, gold datasets of six copies of the conformant sentence.
    """
    rng = random.Random(seed)
    design = generate_design(4, n_tasks, 2 * n_tasks)
    (root / 'design.tsv').write_text(export.design_tsv(design), encoding='utf-8')
    entries = [TimingEntry(row.annotator, row.task, row.mode, row.dataset, rng.randint(50, 250))
               for row in design]
    (root / 'timing.tsv').write_text(export.ledger_tsv(TimingLedger(entries)), encoding='utf-8')
    gold = {dataset: make_document(dataset, *([CONFORMANT_ROWS] * 6)) for dataset in design.datasets}
    (root / 'gold').mkdir()
    for dataset, doc in gold.items():
        write_document(doc, root / 'gold' / (dataset + '.tsv'))
    for row in design:
        directory = root / 'annotations' / row.annotator
        directory.mkdir(parents=True, exist_ok=True)
        write_document(perturb(rng, gold[row.dataset], 0.2), directory / (row.dataset + '.tsv'))
    if parser:
        (root / 'parser').mkdir()
        for dataset, doc in gold.items():
            write_document(perturb(rng, doc, 0.1), root / 'parser' / (dataset + '.tsv'))
    return design
