// Search state lives entirely in the page URL so results are linkable.

export const ALL_FIELDS = [
  "title",
  "abstract",
  "authors",
  "references",
  "latex",
] as const;

export type Field = (typeof ALL_FIELDS)[number];

export const DEFAULT_PAGE_SIZE = 10;

export interface SearchState {
  q: string;
  // canonical-order subset of ALL_FIELDS; empty means all fields
  facets: Field[];
  page: number;
}

export function canonicalFacets(selected: Iterable<string>): Field[] {
  const chosen = new Set(selected);
  return ALL_FIELDS.filter((field) => chosen.has(field));
}

export function fieldsParam(facets: Field[]): string | null {
  return facets.length === 0 ? null : facets.join(",");
}

// Parameters for GET /api/search. The q value is passed through verbatim,
// quotes included; URLSearchParams only applies transport encoding.
export function buildSearchParams(
  state: SearchState,
  size: number = DEFAULT_PAGE_SIZE,
): URLSearchParams {
  const params = new URLSearchParams();
  params.set("q", state.q);
  const fields = fieldsParam(state.facets);
  if (fields !== null) {
    params.set("fields", fields);
  }
  params.set("page", String(state.page));
  params.set("size", String(size));
  return params;
}

export function encodeState(state: SearchState): string {
  const params = new URLSearchParams();
  params.set("q", state.q);
  const fields = fieldsParam(state.facets);
  if (fields !== null) {
    params.set("fields", fields);
  }
  if (state.page > 1) {
    params.set("page", String(state.page));
  }
  return params.toString();
}

export function decodeState(search: string): SearchState {
  const params = new URLSearchParams(search);
  const rawPage = Number(params.get("page") ?? "1");
  const page = Number.isInteger(rawPage) && rawPage >= 1 ? rawPage : 1;
  const rawFields = (params.get("fields") ?? "")
    .split(",")
    .map((name) => name.trim())
    .filter((name) => name.length > 0);
  return {
    q: params.get("q") ?? "",
    facets: canonicalFacets(rawFields),
    page,
  };
}
