import { HitPayload, SearchPayload, SnippetPayload } from "./api";

export function paginationPages(total: number, size: number): number {
  if (total <= 0 || size <= 0) {
    return 0;
  }
  return Math.ceil(total / size);
}

// Wraps each highlighted range of text in a <mark>. Ranges are character
// offsets as returned by the server; out-of-range or overlapping ranges
// are dropped rather than guessed at.
export function highlightFragment(
  text: string,
  highlights: [number, number][],
): DocumentFragment {
  const fragment = document.createDocumentFragment();
  const sorted = [...highlights].sort((a, b) => a[0] - b[0]);
  let cursor = 0;
  for (const [start, end] of sorted) {
    if (start < cursor || end <= start || end > text.length) {
      continue;
    }
    if (start > cursor) {
      fragment.append(text.slice(cursor, start));
    }
    const mark = document.createElement("mark");
    mark.textContent = text.slice(start, end);
    fragment.append(mark);
    cursor = end;
  }
  if (cursor < text.length) {
    fragment.append(text.slice(cursor));
  }
  return fragment;
}

function renderSnippet(field: string, snippet: SnippetPayload): HTMLElement {
  const block = document.createElement("blockquote");
  block.className = `snippet snippet-${field}`;
  block.dataset.field = field;
  block.append(highlightFragment(snippet.text, snippet.highlights));
  return block;
}

function renderHit(hit: HitPayload): HTMLLIElement {
  const item = document.createElement("li");
  item.className = "hit";

  const title = document.createElement("h2");
  const link = document.createElement("a");
  link.href = hit.url;
  link.textContent = hit.title.length > 0 ? hit.title : hit.arxiv_id;
  title.append(link);
  item.append(title);

  const byline = document.createElement("p");
  byline.className = "authors";
  byline.textContent = hit.authors;
  item.append(byline);

  const badges = document.createElement("p");
  badges.className = "badges";
  for (const field of hit.matched_fields) {
    const badge = document.createElement("span");
    badge.className = "badge";
    badge.textContent = field;
    badges.append(badge);
  }
  item.append(badges);

  for (const field of hit.matched_fields) {
    for (const snippet of hit.snippets[field] ?? []) {
      item.append(renderSnippet(field, snippet));
    }
  }
  return item;
}

export function renderResults(
  payload: SearchPayload,
  results: HTMLOListElement,
  pagination: HTMLElement,
  status: HTMLElement,
  onPage: (page: number) => void,
): void {
  results.replaceChildren();
  pagination.replaceChildren();

  if (payload.total === 0) {
    status.textContent = "no results";
    return;
  }
  status.textContent = `${payload.total} result${payload.total === 1 ? "" : "s"}`;

  for (const hit of payload.hits) {
    results.append(renderHit(hit));
  }

  const pages = paginationPages(payload.total, payload.size);
  if (pages <= 1) {
    return;
  }
  for (let page = 1; page <= pages; page += 1) {
    const button = document.createElement("button");
    button.type = "button";
    button.className = "page";
    button.textContent = String(page);
    if (page === payload.page) {
      button.disabled = true;
      button.classList.add("current");
    } else {
      button.addEventListener("click", () => onPage(page));
    }
    pagination.append(button);
  }
}

export function renderServerError(status: HTMLElement, detail: string): void {
  status.replaceChildren();
  const message = document.createElement("span");
  message.className = "error";
  message.textContent = detail;
  status.append(message);
}

export function renderNetworkError(
  status: HTMLElement,
  onRetry: () => void,
): void {
  status.replaceChildren();
  const message = document.createElement("span");
  message.className = "error";
  message.textContent = "search request failed";
  const retry = document.createElement("button");
  retry.type = "button";
  retry.id = "retry";
  retry.textContent = "retry";
  retry.addEventListener("click", onRetry);
  status.append(message, " ", retry);
}
