"""NumPy reference kernels; semantics match the compiled extension exactly.

Both backends must produce bit-identical results: the floating-point
expressions here are written in the same evaluation order as the typed
loops in the extension, and each output element is touched exactly once
per call (posting lists never repeat a doc_id).
"""

import numpy as np


def bm25_accumulate(doc_ids, tfs, field_lens, idf, k1, b, avglen, out):
    """out[d] += idf * tf * (k1+1) / (tf + k1*(1 - b + b*len_d/avglen))."""
    if doc_ids.size == 0:
        return
    tf = tfs.astype(np.float64)
    lens = field_lens[doc_ids].astype(np.float64)
    denom = tf + k1 * (1.0 - b + b * (lens / avglen))
    out[doc_ids] += (idf * tf * (k1 + 1.0)) / denom


def shifted_intersect(a, b, delta):
    """Values p of sorted u32 array ``a`` with p + delta present in ``b``."""
    if a.size == 0 or b.size == 0:
        return a[:0]
    mask = np.isin(a.astype(np.int64) + int(delta), b.astype(np.int64))
    return a[mask]
