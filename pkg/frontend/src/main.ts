import { ApiError, SearchClient, isAbortError } from "./api";
import {
  ALL_FIELDS,
  SearchState,
  canonicalFacets,
  decodeState,
  encodeState,
} from "./appState";
import {
  renderNetworkError,
  renderResults,
  renderServerError,
} from "./render";

const form = document.querySelector<HTMLFormElement>("#search-form")!;
const input = document.querySelector<HTMLInputElement>("#q")!;
const results = document.querySelector<HTMLOListElement>("#results")!;
const pagination = document.querySelector<HTMLElement>("#pagination")!;
const status = document.querySelector<HTMLElement>("#status")!;
const facetBoxes = Array.from(
  document.querySelectorAll<HTMLInputElement>("#facets input[type=checkbox]"),
);

const client = new SearchClient();

function stateFromForm(page: number): SearchState {
  const selected = facetBoxes
    .filter((box) => box.checked)
    .map((box) => box.value);
  return { q: input.value, facets: canonicalFacets(selected), page };
}

function applyStateToForm(state: SearchState): void {
  input.value = state.q;
  const chosen = new Set<string>(state.facets);
  for (const box of facetBoxes) {
    box.checked = chosen.has(box.value);
  }
}

async function runSearch(state: SearchState): Promise<void> {
  if (state.q.trim().length === 0) {
    results.replaceChildren();
    pagination.replaceChildren();
    status.textContent = "";
    return;
  }
  status.textContent = "searching…";
  try {
    const payload = await client.search(state);
    renderResults(payload, results, pagination, status, (page) => {
      navigate({ ...state, page });
    });
  } catch (err) {
    if (isAbortError(err)) {
      return;
    }
    results.replaceChildren();
    pagination.replaceChildren();
    if (err instanceof ApiError) {
      renderServerError(status, err.message);
    } else {
      renderNetworkError(status, () => {
        void runSearch(state);
      });
    }
  }
}

function navigate(state: SearchState): void {
  const encoded = encodeState(state);
  const target = encoded.length > 0 ? `?${encoded}` : location.pathname;
  history.pushState(null, "", target);
  applyStateToForm(state);
  void runSearch(state);
}

form.addEventListener("submit", (event) => {
  event.preventDefault();
  navigate(stateFromForm(1));
});

for (const box of facetBoxes) {
  if (!(ALL_FIELDS as readonly string[]).includes(box.value)) {
    throw new Error(`unknown facet checkbox: ${box.value}`);
  }
  box.addEventListener("change", () => {
    if (input.value.trim().length > 0) {
      navigate(stateFromForm(1));
    }
  });
}

window.addEventListener("popstate", () => {
  const state = decodeState(location.search);
  applyStateToForm(state);
  void runSearch(state);
});

const initial = decodeState(location.search);
applyStateToForm(initial);
void runSearch(initial);
