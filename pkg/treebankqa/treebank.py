#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: dependency annotation data model and TSV reader/writer
# Created: 03.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
Data model of a PDT-style dependency annotation.

Every token of a sentence (punctuation included) is a node, node ``0`` is the
technical root. A :class:`Document` is read from and written to a 6-column
TSV format::

    # doc_id = D1
    # sent_id = s1
    1<TAB>Pojďme<TAB>jít<TAB>V<TAB>0<TAB>Pred
    2<TAB>.<TAB>.<TAB>Z<TAB>1<TAB>AuxK
    <blank line>

Columns: ID, FORM, LEMMA, TAG, HEAD, AFUN (label with affixes). The TAG column
holds a coarse POS or a full positional tag, :attr:`Token.pos` is its first
character.

All objects are immutable.
"""
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path

from treebankqa.data import pattern
from treebankqa.errors import ParseError, LabelError, DocumentMismatchError
from treebankqa.label import Label

logger = logging.getLogger(__name__)

COLUMNS = 6
ROOT = 0


def check_id(kind, value, empty=False):
    """ Ids are written to one comment line: no line breaks and no
    surrounding blanks. Only a `doc_id` may be empty.

    :raises ValueError: for an invalid id
    """
    if not isinstance(value, str):
        raise ValueError("%s must be a string, got %r" % (kind, value))
    if not value and empty:
        return
    if not value or value != value.strip() or '\n' in value or '\r' in value:
        raise ValueError("invalid %s %r" % (kind, value))


@dataclass(frozen=True)
class Token:
    id: int
    form: str
    lemma: str
    tag: str
    head: int
    label: Label

    @property
    def pos(self):
        """ Coarse part of speech: first character of the tag (``'V'``,
        ``'N'``, ``'Z'``, ...).
        """
        return self.tag[:1].upper()

    @property
    def afun(self):
        return self.label.afun

    @property
    def affixes(self):
        return self.label.affixes

    def to_line(self):
        return "\t".join((str(self.id), self.form, self.lemma, self.tag, str(self.head), str(self.label)))


@dataclass(frozen=True)
class StructuralError:
    """ One violation of the single-rooted-tree condition.

    `kind` is ``'head-out-of-range' | 'self-loop' | 'cycle' | 'unreachable'``,
    `tokens` the involved token ids.
    """
    kind: str
    tokens: tuple
    message: str

    def __str__(self):
        return self.message


@dataclass(frozen=True)
class AnnotatedSentence:
    sent_id: str
    tokens: tuple = ()

    def __post_init__(self):
        check_id('sent_id', self.sent_id)
        object.__setattr__(self, 'tokens', tuple(self.tokens))

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, token_id):
        """ Get token by its 1-based `token_id`. """
        if token_id < 1:
            raise IndexError("token id %d out of range" % token_id)
        return self.tokens[token_id - 1]

    @property
    def heads(self):
        return tuple(token.head for token in self.tokens)

    @property
    def forms(self):
        return tuple(token.form for token in self.tokens)

    def parent(self, token):
        """ Governing token of `token`, `None` for children of the technical root. """
        if token.head == ROOT:
            return None
        return self[token.head]

    def children(self, token_id):
        return [token for token in self.tokens if token.head == token_id]

    def ancestors(self, token):
        """ Governors of `token` up to (excluding) the technical root,
        nearest first. Requires a valid tree.
        """
        result = []
        node = self.parent(token)
        while node is not None:
            result.append(node)
            node = self.parent(node)
        return result

    def depth(self, token):
        """ Distance of `token` from the technical root (root children have
        depth 1).
        """
        return len(self.ancestors(token)) + 1

    def max_depth(self):
        return max((self.depth(token) for token in self.tokens), default=0)

    def is_valid(self):
        return not validate_tree(self)


@dataclass(frozen=True)
class Document:
    doc_id: str = ''
    sentences: tuple = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        check_id('doc_id', self.doc_id, empty=True)
        object.__setattr__(self, 'sentences', tuple(self.sentences))
        index = {}
        for sentence in self.sentences:
            if sentence.sent_id in index:
                raise ValueError("duplicate sent_id '%s'" % sentence.sent_id)
            index[sentence.sent_id] = sentence
        object.__setattr__(self, '_index', index)

    @property
    def token_count(self):
        return sum(len(sentence) for sentence in self.sentences)

    @property
    def sent_ids(self):
        return tuple(sentence.sent_id for sentence in self.sentences)

    def sentence(self, sent_id):
        return self._index[sent_id]

    def __len__(self):
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    def tokens(self):
        """ Iterate over ``(sentence, token)`` pairs in document order. """
        for sentence in self.sentences:
            for token in sentence.tokens:
                yield sentence, token


def validate_tree(sentence):
    """ Check that the head relation of `sentence` forms a single tree rooted
    in the technical root ``0``. Multiple children of the root are allowed.

    :returns: list of :class:`StructuralError`, empty for a valid tree
    """
    size = len(sentence)
    errors = []
    bad_heads = set()
    for token in sentence.tokens:
        if token.head < 0 or token.head > size:
            bad_heads.add(token.id)
            errors.append(StructuralError(
                'head-out-of-range', (token.id, ),
                "head %d out of range at token %d" % (token.head, token.id)))
        elif token.head == token.id:
            bad_heads.add(token.id)
            errors.append(StructuralError(
                'self-loop', (token.id, ), "self-loop at token %d" % token.id))

    # 0 = unvisited, 1 = on current path, 2 = done
    state = [0] * (size + 1)
    reaches_root = [False] * (size + 1)
    on_cycle = set()
    heads = (ROOT, ) + sentence.heads
    for start in range(1, size + 1):
        if state[start]:
            continue
        path = []
        node = start
        while True:
            if node == ROOT:
                result = True
                break
            if node in bad_heads:
                # unreachable chains ending in a broken head are reported below
                state[node] = 2
                result = False
                break
            if state[node] == 2:
                result = reaches_root[node]
                break
            if state[node] == 1:
                cycle = path[path.index(node):]
                on_cycle.update(cycle)
                members = tuple(sorted(cycle))
                errors.append(StructuralError(
                    'cycle', members,
                    "cycle through tokens {%s}" % ", ".join(str(i) for i in members)))
                result = False
                break
            state[node] = 1
            path.append(node)
            node = heads[node]
        for visited in path:
            state[visited] = 2
            reaches_root[visited] = result

    for token_id in range(1, size + 1):
        if not reaches_root[token_id] and token_id not in on_cycle and token_id not in bad_heads:
            errors.append(StructuralError(
                'unreachable', (token_id, ),
                "token %d is not reachable from the root" % token_id))
    return errors


class _SentenceBuilder(object):
    def __init__(self, sent_id, lineno, named=True):
        self.sent_id = sent_id
        self.lineno = lineno
        self.named = named
        self.rows = []  # (lineno, id, form, lemma, tag, head, label)

    def build(self, inventory):
        tokens = []
        for lineno, token_id, form, lemma, tag, head, label in self.rows:
            if head > len(self.rows):
                raise ParseError("head %d out of range at token %d" % (head, token_id), lineno, 'head')
            tokens.append(Token(token_id, form, lemma, tag, head, label))
        sentence = AnnotatedSentence(self.sent_id, tokens)
        errors = validate_tree(sentence)
        if errors:
            first = errors[0]
            lineno = self.rows[first.tokens[0] - 1][0]
            raise ParseError("sentence '%s': %s" % (self.sent_id, first.message), lineno, 'tree')
        return sentence


def parse_document(text, inventory, doc_id=''):
    """ Parse the TSV annotation format.

    :param string text: file content
    :param inventory: :class:`~treebankqa.label.AfunInventory` for label checks
    :param doc_id: document id, overridden by a ``# doc_id = ...`` line
    :returns: :class:`Document`
    :raises ParseError: with line number and category
    """
    sentences = []
    sent_ids = set()
    unnamed = []  # indices of sentences without a sent_id comment
    builder = None
    pending_id = None

    def finish(builder):
        sentence = builder.build(inventory)
        if builder.named:
            if sentence.sent_id in sent_ids:
                raise ParseError("duplicate sent_id '%s'" % sentence.sent_id, builder.lineno, 'sent-id')
            sent_ids.add(sentence.sent_id)
        else:
            unnamed.append(len(sentences))
        sentences.append(sentence)

    for lineno, line in enumerate(text.split('\n'), start=1):
        if not line.strip():
            if builder is not None:
                finish(builder)
                builder = None
            continue
        if line.startswith('#'):
            result = pattern.sent_id.match(line)
            if result:
                if builder is not None:
                    raise ParseError("sent_id comment inside a sentence", lineno, 'format')
                if not result.group(1):
                    raise ParseError("empty sent_id", lineno, 'sent-id')
                pending_id = (result.group(1), lineno)
                continue
            result = pattern.doc_id.match(line)
            if result and not sentences and builder is None:
                doc_id = result.group(1)
            continue

        columns = line.split('\t')
        if len(columns) != COLUMNS:
            raise ParseError("expected %d columns, got %d" % (COLUMNS, len(columns)), lineno, 'format')
        if builder is None:
            if pending_id is not None:
                builder = _SentenceBuilder(pending_id[0], pending_id[1])
                pending_id = None
            else:
                builder = _SentenceBuilder("s%d" % (len(sentences) + 1), lineno, named=False)
        id_str, form, lemma, tag, head_str, label_str = columns
        if not pattern.integer.match(id_str):
            raise ParseError("cannot parse token ID '%s'" % id_str, lineno, 'id')
        token_id = int(id_str)
        if token_id != len(builder.rows) + 1:
            raise ParseError("token ID %d, expected %d" % (token_id, len(builder.rows) + 1), lineno, 'id')
        if not form:
            raise ParseError("empty FORM", lineno, 'format')
        if not pattern.integer.match(head_str):
            raise ParseError("cannot parse HEAD '%s'" % head_str, lineno, 'head')
        try:
            label = Label.parse(label_str, inventory)
        except LabelError as e:
            raise ParseError(str(e), lineno, 'afun')
        builder.rows.append((lineno, token_id, form, lemma, tag, int(head_str), label))

    if builder is not None:
        finish(builder)
    if pending_id is not None:
        raise ParseError("sent_id comment without tokens", pending_id[1], 'format')
    # automatic ids s<position>, or the next free s<N> after explicit ids
    for index in unnamed:
        number = index + 1
        while "s%d" % number in sent_ids:
            number += 1
        sent_ids.add("s%d" % number)
        sentences[index] = replace(sentences[index], sent_id="s%d" % number)
    document = Document(doc_id, sentences)
    logger.debug("parsed document '%s': %d sentences, %d tokens",
                 doc_id, len(document), document.token_count)
    return document


def serialize_document(doc):
    """ Serialize `doc` to the TSV format, labels in canonical affix order.
    Every sentence block ends with a blank line; the empty document without
    `doc_id` serializes to the empty string.
    """
    lines = []
    if doc.doc_id:
        lines.append("# doc_id = %s" % doc.doc_id)
    for sentence in doc.sentences:
        lines.append("# sent_id = %s" % sentence.sent_id)
        lines.extend(token.to_line() for token in sentence.tokens)
        lines.append('')
    if not lines:
        return ''
    return '\n'.join(lines) + '\n'


def read_document(path, inventory):
    """ Read a TSV file, the file stem is the default `doc_id`. """
    path = Path(path)
    try:
        return parse_document(path.read_text(encoding='utf-8'), inventory, doc_id=path.stem)
    except ParseError as e:
        e.filename = path
        raise


def write_document(doc, path):
    with open(path, mode='w', encoding='utf-8', newline='\n') as fileobj:
        fileobj.write(serialize_document(doc))


def check_parallel(a, b):
    """ Check that `a` and `b` annotate the same sentences with the same
    tokenization.

    :raises DocumentMismatchError: for non-parallel documents
    """
    if a.sent_ids != b.sent_ids:
        raise DocumentMismatchError("documents '%s' and '%s' cover different sentences"
                                    % (a.doc_id, b.doc_id))
    for sa, sb in zip(a.sentences, b.sentences):
        if sa.forms != sb.forms:
            raise DocumentMismatchError("sentence '%s' is tokenized differently in '%s' and '%s'"
                                        % (sa.sent_id, a.doc_id, b.doc_id))
