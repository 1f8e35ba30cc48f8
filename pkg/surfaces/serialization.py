import json
from typing import Any, Dict

from surfaces.fatgraph import Edge, FatGraph, HalfEdge, HEAD, TAIL
from utils.error_handler import RibbonDataError


def dump_json(payload: Any) -> str:
    """Deterministic JSON text (sorted keys, two-space indent, trailing newline)"""
    return json.dumps(payload, indent=2, sort_keys=True) + '\n'


def graph_to_dict(graph: FatGraph) -> Dict[str, Any]:
    return {
        'vertices': graph.vertex_count,
        'edges': [
            {'id': edge.edge_id, 'label': edge.label, 'tail': edge.tail, 'head': edge.head}
            for edge in graph.edges
        ],
        'order': {
            str(vertex): [half.token for half in order]
            for vertex, order in enumerate(graph.orders)
        }
    }


def graph_from_dict(data: Dict[str, Any]) -> FatGraph:
    """Rebuild a FatGraph from graph_to_dict output"""
    try:
        vertex_count = int(data['vertices'])
        edges = [
            Edge(int(e['id']), str(e['label']), int(e['tail']), int(e['head']))
            for e in data['edges']
        ]
        orders = [
            [_parse_token(token) for token in data['order'][str(vertex)]]
            for vertex in range(vertex_count)
        ]
    except (KeyError, TypeError, ValueError) as e:
        raise RibbonDataError(f"malformed fat graph JSON: {str(e)}")

    return FatGraph(vertex_count, edges, orders)


def graph_to_dot(graph: FatGraph, name: str = 'fatgraph') -> str:
    """DOT text: one node per vertex, labelled directed edges, cyclic orders as comments"""
    lines = [f'digraph {name} {{']
    for vertex, order in enumerate(graph.orders):
        lines.append(f'  // order v{vertex}: {" ".join(half.token for half in order)}')
        lines.append(f'  v{vertex} [label="{vertex}"];')
    for edge in graph.edges:
        tail_port = graph.position(HalfEdge(edge.edge_id, TAIL))
        head_port = graph.position(HalfEdge(edge.edge_id, HEAD))
        lines.append(
            f'  v{edge.tail} -> v{edge.head} [label="{edge.label}"]; '
            f'// e{edge.edge_id} ports {tail_port}->{head_port}'
        )
    lines.append('}')
    return '\n'.join(lines) + '\n'


def _parse_token(token: str) -> HalfEdge:
    if len(token) < 3 or token[0] != 'e' or token[-1] not in '+-':
        raise ValueError(f"bad half-edge token {token!r}")
    return HalfEdge(int(token[1:-1]), TAIL if token[-1] == '+' else HEAD)
