"""
Date: 261018

{Description: the command-line verbs. Each function reads its JSON inputs, runs one library
operation and writes JSON (or DOT) to the output path or stdout. Summary lines and
diagnostics go to stderr. The return value is the exit status}
"""

from __future__ import annotations

import logging
import sys

from tgkit._report_ import diagnostics_frame
from tgkit.classify import classify as classify_tree, enumerate_characteristic, tree_summary, leaf_frame, distinct_leaves
from tgkit.formats import (parse_with, read_json, dumps, graph_from_dict, torus_graph_from_dict, torus_graph_to_dict,
                           characteristic_from_dict, characteristic_to_dict, record_to_dict, tree_to_dict,
                           torus_graph_to_dot, tree_to_dot)
from tgkit.graph import validate_nice
from tgkit.surgery import find_sum_sites, make_site, connected_sum, split as split_graph, find_splits
from tgkit.torus import from_characteristic, validate_torus_graph, is_characteristic, is_equivalent

logger = logging.getLogger(__name__)

FORMATS = ('json', 'dot')

def _emit(text, output):
    if output is None:
        sys.stdout.write(text + "\n")
    else:
        with open(output, 'w', encoding='utf-8') as f:
            f.write(text + "\n")

def _say(line):
    print(line, file=sys.stderr)

def _kind(doc):
    if isinstance(doc, dict) and 'axial' in doc:
        return 'torus graph'
    if isinstance(doc, dict) and 'lambda' in doc:
        return 'characteristic data'
    return 'graph'

def validate(input, report=None):
    """Check a graph, characteristic data or torus graph file.

    The document kind is detected from its fields: "axial" marks a torus graph,
    "lambda" characteristic data, anything else a rotation graph. Every failed
    check is printed to stderr; the exit status is 0 when all checks pass and 1
    otherwise.

    Parameters
    ----------
    input : str or path
        JSON document to check.
    report : str or path, default None
        Write the diagnostics as a CSV table (columns check, where, message).
    """
    doc = read_json(input)
    kind = _kind(doc)
    if kind == 'torus graph':
        tg = parse_with(torus_graph_from_dict, doc)
        ok, diagnostics = validate_torus_graph(tg)
        n = tg.vertex_count
    elif kind == 'characteristic data':
        g, lam = parse_with(characteristic_from_dict, doc)
        ok_nice, nice = validate_nice(g)
        ok_lam, unimodular = is_characteristic(g, lam)
        ok, diagnostics, n = ok_nice and ok_lam, nice + unimodular, g.vertex_count
    else:
        g = parse_with(graph_from_dict, doc)
        ok, diagnostics = validate_nice(g)
        n = g.vertex_count
    for d in diagnostics:
        _say(str(d))
    if report is not None:
        diagnostics_frame(diagnostics).to_csv(report, index=False)
    _say("%s %s, %d vertices" % ("valid" if ok else "invalid", kind, n))
    return 0 if ok else 1

def build(input, output=None, format='json', unoriented=False):
    """Build the torus graph of omnioriented characteristic data.

    The input holds "graph" (a rotation graph) and "lambda" (one vector per facet,
    in facet order). The orientation induced by the embedding is attached unless
    unoriented is set.

    Parameters
    ----------
    input : str or path
        characteristic data JSON.
    output : str or path, default None
        Output file; stdout when omitted.
    format : str, default 'json'
        'json' or 'dot'.
    unoriented : bool, default False
        Leave sigma off the result.
    """
    g, lam = parse_with(characteristic_from_dict, read_json(input))
    tg = from_characteristic(g, lam, oriented=not unoriented)
    _emit(torus_graph_to_dot(tg) if format == 'dot' else dumps(torus_graph_to_dict(tg)), output)
    _say("built torus graph, %d vertices" % tg.vertex_count)
    return 0

def classify(input, output=None, format='json', report=None, dedup=None):
    """Decompose a torus graph into connected sums of basic pieces.

    Writes the decomposition tree and prints the summary line (S6, or QT×k SB×l)
    to stderr.

    Parameters
    ----------
    input : str or path
        torus graph JSON; sigma is synthesized when absent.
    output : str or path, default None
        Output file; stdout when omitted.
    format : str, default 'json'
        'json' or 'dot'.
    report : str or path, default None
        Write the leaf table (kind, eps, a, b, vertices) as CSV.
    dedup : str, default None
        'exact' or 'lifts': also report the number of leaves distinct up to that equivalence.
    """
    tg = parse_with(torus_graph_from_dict, read_json(input))
    tree = classify_tree(tg)
    _emit(tree_to_dot(tree) if format == 'dot' else dumps(tree_to_dict(tree)), output)
    if report is not None:
        leaf_frame(tree).to_csv(report, index=False)
    _say(tree_summary(tree))
    if dedup is not None:
        _say("%d distinct leaves (%s)" % (len(distinct_leaves(tree, dedup)), dedup))
    return 0

def connect(input, site=None, output=None, format='json'):
    """Connected sum of two oriented torus graphs.

    Without a site the admissible sites (equal labels, opposite sigma) are listed
    as JSON; with --site P Q the sum at vertex P of the first graph and vertex Q
    of the second is written together with its gluing record.

    Parameters
    ----------
    input : two str or path
        the two torus graph JSON files.
    site : two ints, default None
        vertex of the first graph and vertex of the second.
    output : str or path, default None
        Output file; stdout when omitted.
    format : str, default 'json'
        'json' or 'dot' (the sum only).
    """
    tg1, tg2 = (parse_with(torus_graph_from_dict, read_json(path)) for path in input)
    if site is None:
        sites = find_sum_sites(tg1, tg2)
        _emit(dumps({'sites': [{'p': s.p, 'q': s.q, 'matching': [list(m) for m in s.matching]} for s in sites]}), output)
        _say("%d admissible sites" % len(sites))
        return 0
    p, q = site
    tg, record = connected_sum(tg1, tg2, make_site(tg1, p, tg2, q))
    if format == 'dot':
        _emit(torus_graph_to_dot(tg), output)
    else:
        _emit(dumps({'torus_graph': torus_graph_to_dict(tg), 'record': record_to_dict(record)}), output)
    _say("sum at (%d, %d), %d vertices" % (p, q, tg.vertex_count))
    return 0

def split(input, cut=None, output=None, format='json'):
    """Split an oriented torus graph along three edges.

    Without a cut the proper admissible cuts are listed as JSON; with --cut E1 E2 E3
    (edge ids, the smaller dart of each edge) the two capped pieces are written
    together with the gluing record.

    Parameters
    ----------
    input : str or path
        torus graph JSON.
    cut : three ints, default None
        edges to cut.
    output : str or path, default None
        Output file; stdout when omitted.
    format : str, default 'json'
        'json' or 'dot'.
    """
    tg = parse_with(torus_graph_from_dict, read_json(input))
    if cut is None:
        cuts = find_splits(tg)
        _emit(dumps({'cuts': [list(c) for c in cuts]}), output)
        _say("%d admissible cuts" % len(cuts))
        return 0
    first, second, record = split_graph(tg, cut)
    if format == 'dot':
        _emit(torus_graph_to_dot(first, "first") + "\n" + torus_graph_to_dot(second, "second"), output)
    else:
        _emit(dumps({'first': torus_graph_to_dict(first), 'second': torus_graph_to_dict(second),
                     'record': record_to_dict(record)}), output)
    _say("split into %d + %d vertices" % (first.vertex_count, second.vertex_count))
    return 0

def iso(input, twisted=False, oriented=False):
    """Test two torus graphs for equivalence.

    Prints {"equivalent": ..., "vertex_map": ..., "matrix": ...} to stdout;
    vertex_map and matrix are null when no isomorphism exists.

    Parameters
    ----------
    input : two str or path
        the two torus graph JSON files.
    twisted : bool, default False
        Allow one lattice automorphism applied to all labels.
    oriented : bool, default False
        Require sigma to agree up to one global sign.
    """
    tg1, tg2 = (parse_with(torus_graph_from_dict, read_json(path)) for path in input)
    found = is_equivalent(tg1, tg2, twisted=twisted, oriented=oriented)
    doc = {'equivalent': found is not None,
           'vertex_map': None if found is None else {str(v): w for v, w in sorted(found.vertex_map.items())},
           'matrix': None if found is None or found.matrix is None else [list(r) for r in found.matrix]}
    _emit(dumps(doc), None)
    _say("equivalent" if found is not None else "not equivalent")
    return 0

def enumerate_lambdas(input, bound=1, dedup=None, shards=1, shard=0, limit=None, normalized=False, output=None):
    """Enumerate characteristic data on a rotation graph.

    Streams one JSON document per line, each holding the graph and one "lambda"
    assignment with coordinates in [-bound, bound].

    Parameters
    ----------
    input : str or path
        rotation graph JSON.
    bound : int, default 1
        Largest absolute coordinate.
    dedup : str, default None
        'exact' or 'lifts' equivalence of the induced torus graphs.
    shards : int, default 1
        Number of independent parts of the search.
    shard : int, default 0
        Which part to run.
    limit : int, default None
        Stop after this many results.
    normalized : bool, default False
        Pin the facets around vertex 0 to the standard basis.
    output : str or path, default None
        Output file; stdout when omitted.
    """
    g = parse_with(graph_from_dict, read_json(input))
    out = sys.stdout if output is None else open(output, 'w', encoding='utf-8')
    count = 0
    try:
        for lam in enumerate_characteristic(g, bound, dedup=dedup, shards=shards, shard=shard, limit=limit,
                                            normalized=normalized):
            out.write(dumps(characteristic_to_dict(g, lam), indent=None) + "\n")
            count += 1
    finally:
        if output is not None:
            out.close()
    _say("%d characteristic functions" % count)
    return 0
