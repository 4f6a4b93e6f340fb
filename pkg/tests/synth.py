"""Synthetic corpus generation for tests.

Documents use a restricted vocabulary (lowercase alphanumeric words,
space-separated) so the independent oracle in oracle.py can re-tokenize
stored text with plain regular expressions.  With max_blocks=1 and
max_refs=1 the latex and references fields hold a single snippet, so
token adjacency in the stored text matches the indexed positions.
"""

import random

from pseudoseer.corpus import PaperRecord, PseudocodeBlock, ReferenceContext

VOCAB = [
    "tree", "sort", "graph", "bubble", "merge", "quick", "heap", "node",
    "edge", "search", "list", "array", "hash", "path", "queue", "stack",
    "loop", "index", "key", "value", "greedy", "dynamic", "binary",
    "linear", "matrix", "vector", "prune", "split", "scan", "rank",
    "x1", "y2", "k3", "n0",
]

COMMANDS = [
    "\\for", "\\endfor", "\\if", "\\endif", "\\state", "\\while",
    "\\endwhile", "\\return", "\\procedure", "\\comment",
]


def words(rng: random.Random, low: int, high: int) -> str:
    return " ".join(rng.choice(VOCAB) for _ in range(rng.randint(low, high)))


def latex_body(rng: random.Random, low: int = 5, high: int = 25) -> str:
    parts = [
        rng.choice(COMMANDS) if rng.random() < 0.3 else rng.choice(VOCAB)
        for _ in range(rng.randint(low, high))
    ]
    return "\\begin{algorithm} " + " ".join(parts) + " \\end{algorithm}"


def synth_paper(
    rng: random.Random,
    serial: int,
    max_blocks: int = 1,
    max_refs: int = 1,
) -> tuple[PaperRecord, list[PseudocodeBlock]]:
    arxiv_id = f"21{rng.randint(1, 12):02d}.{serial:05d}"
    paper = PaperRecord(
        arxiv_id=arxiv_id,
        title=words(rng, 0, 8),
        abstract=words(rng, 0, 40),
        authors=[words(rng, 1, 2) for _ in range(rng.randint(0, 3))],
        year=2021,
        url=f"https://arxiv.org/abs/{arxiv_id}",
    )
    blocks = []
    for b in range(rng.randint(0, max_blocks)):
        contexts = [
            ReferenceContext(
                label=f"alg:{serial}-{b}",
                raw_window="(raw)",
                cleaned_text=words(rng, 3, 15),
            )
            for _ in range(rng.randint(0, max_refs))
        ]
        blocks.append(
            PseudocodeBlock(
                paper_id=arxiv_id,
                latex_body=latex_body(rng),
                labels=[f"alg:{serial}-{b}"],
                reference_contexts=contexts,
                equation_refs=[],
            )
        )
    return paper, blocks


def synth_corpus(
    seed: int,
    n_docs: int,
    max_blocks: int = 1,
    max_refs: int = 1,
) -> list[tuple[PaperRecord, list[PseudocodeBlock]]]:
    rng = random.Random(seed)
    return [
        synth_paper(rng, i, max_blocks=max_blocks, max_refs=max_refs)
        for i in range(n_docs)
    ]


def random_query_terms(rng: random.Random, low: int = 1, high: int = 3) -> list[str]:
    return [rng.choice(VOCAB) for _ in range(rng.randint(low, high))]
