import { describe, expect, it, vi } from "vitest";

import { HitPayload, SearchPayload } from "../src/api";
import {
  highlightFragment,
  paginationPages,
  renderNetworkError,
  renderResults,
  renderServerError,
} from "../src/render";

function makeHit(overrides: Partial<HitPayload> = {}): HitPayload {
  return {
    arxiv_id: "2101.00001",
    url: "https://arxiv.org/abs/2101.00001",
    title: "tree structures",
    authors: "A. One; B. Two",
    score: 1.25,
    matched_fields: ["abstract"],
    snippets: {
      abstract: [{ text: "alpha tree beta", highlights: [[6, 10]] }],
    },
    ...overrides,
  };
}

function makePayload(overrides: Partial<SearchPayload> = {}): SearchPayload {
  return { total: 1, page: 1, size: 10, hits: [makeHit()], ...overrides };
}

interface Mounted {
  results: HTMLOListElement;
  pagination: HTMLElement;
  status: HTMLElement;
}

function mount(): Mounted {
  const results = document.createElement("ol");
  const pagination = document.createElement("nav");
  const status = document.createElement("div");
  document.body.replaceChildren(results, pagination, status);
  return { results, pagination, status };
}

describe("paginationPages", () => {
  it.each([
    [25, 10, 3],
    [0, 10, 0],
    [10, 10, 1],
    [11, 10, 2],
    [1, 10, 1],
    [10, 0, 0],
    [-5, 10, 0],
  ])("total %i at size %i gives %i pages", (total, size, want) => {
    expect(paginationPages(total, size)).toBe(want);
  });
});

describe("highlightFragment", () => {
  it("preserves the full text and marks the given slices", () => {
    const text = "alpha tree beta tree";
    const fragment = highlightFragment(text, [
      [6, 10],
      [16, 20],
    ]);
    const host = document.createElement("div");
    host.append(fragment);
    expect(host.textContent).toBe(text);
    const marks = Array.from(host.querySelectorAll("mark"));
    expect(marks.map((m) => m.textContent)).toEqual(["tree", "tree"]);
  });

  it("sorts unordered ranges", () => {
    const text = "alpha tree beta";
    const host = document.createElement("div");
    host.append(
      highlightFragment(text, [
        [11, 15],
        [0, 5],
      ]),
    );
    expect(host.textContent).toBe(text);
    const marks = Array.from(host.querySelectorAll("mark"));
    expect(marks.map((m) => m.textContent)).toEqual(["alpha", "beta"]);
  });

  it("drops overlapping, empty and out-of-range slices", () => {
    const text = "alpha tree beta";
    const host = document.createElement("div");
    host.append(
      highlightFragment(text, [
        [0, 5],
        [3, 8],
        [9, 9],
        [12, 99],
        [-1, 2],
      ]),
    );
    expect(host.textContent).toBe(text);
    const marks = Array.from(host.querySelectorAll("mark"));
    expect(marks.map((m) => m.textContent)).toEqual(["alpha"]);
  });

  it("marks nothing when there are no highlights", () => {
    const host = document.createElement("div");
    host.append(highlightFragment("plain text", []));
    expect(host.textContent).toBe("plain text");
    expect(host.querySelectorAll("mark")).toHaveLength(0);
  });
});

describe("renderResults", () => {
  it("links the title to the paper url and lists authors", () => {
    const { results, pagination, status } = mount();
    renderResults(makePayload(), results, pagination, status, () => {});
    const link = results.querySelector("h2 a")!;
    expect(link.getAttribute("href")).toBe("https://arxiv.org/abs/2101.00001");
    expect(link.textContent).toBe("tree structures");
    expect(results.querySelector(".authors")!.textContent).toBe(
      "A. One; B. Two",
    );
  });

  it("falls back to the arxiv id when the title is empty", () => {
    const { results, pagination, status } = mount();
    renderResults(
      makePayload({ hits: [makeHit({ title: "" })] }),
      results,
      pagination,
      status,
      () => {},
    );
    expect(results.querySelector("h2 a")!.textContent).toBe("2101.00001");
  });

  it("shows one badge per matched field", () => {
    const { results, pagination, status } = mount();
    const hit = makeHit({
      matched_fields: ["title", "abstract"],
      snippets: {
        title: [{ text: "tree structures", highlights: [[0, 4]] }],
        abstract: [{ text: "alpha tree beta", highlights: [[6, 10]] }],
      },
    });
    renderResults(
      makePayload({ hits: [hit] }),
      results,
      pagination,
      status,
      () => {},
    );
    const badges = Array.from(results.querySelectorAll(".badge"));
    expect(badges.map((b) => b.textContent)).toEqual(["title", "abstract"]);
  });

  it("marks snippet highlights at the returned slices", () => {
    const { results, pagination, status } = mount();
    renderResults(makePayload(), results, pagination, status, () => {});
    const snippet = results.querySelector(".snippet")!;
    expect(snippet.textContent).toBe("alpha tree beta");
    expect(snippet.querySelector("mark")!.textContent).toBe("tree");
  });

  it("tags latex snippets so styling can keep them verbatim", () => {
    const { results, pagination, status } = mount();
    const hit = makeHit({
      matched_fields: ["latex"],
      snippets: {
        latex: [{ text: "\\For each tree node", highlights: [[10, 14]] }],
      },
    });
    renderResults(
      makePayload({ hits: [hit] }),
      results,
      pagination,
      status,
      () => {},
    );
    const snippet = results.querySelector(".snippet")!;
    expect(snippet.classList.contains("snippet-latex")).toBe(true);
    expect(snippet.textContent).toBe("\\For each tree node");
  });

  it("says no results and hides pagination when nothing matched", () => {
    const { results, pagination, status } = mount();
    renderResults(
      makePayload({ total: 0, hits: [] }),
      results,
      pagination,
      status,
      () => {},
    );
    expect(status.textContent).toBe("no results");
    expect(results.children).toHaveLength(0);
    expect(pagination.children).toHaveLength(0);
  });

  it("renders 3 page controls for total 25 at size 10", () => {
    const { results, pagination, status } = mount();
    renderResults(
      makePayload({ total: 25, page: 2 }),
      results,
      pagination,
      status,
      () => {},
    );
    const buttons = Array.from(
      pagination.querySelectorAll<HTMLButtonElement>("button"),
    );
    expect(buttons.map((b) => b.textContent)).toEqual(["1", "2", "3"]);
    expect(buttons[1].disabled).toBe(true);
    expect(buttons[1].classList.contains("current")).toBe(true);
    expect(buttons[0].disabled).toBe(false);
  });

  it("omits pagination when everything fits on one page", () => {
    const { results, pagination, status } = mount();
    renderResults(
      makePayload({ total: 10 }),
      results,
      pagination,
      status,
      () => {},
    );
    expect(pagination.children).toHaveLength(0);
  });

  it("reports page clicks through the callback", () => {
    const { results, pagination, status } = mount();
    const onPage = vi.fn();
    renderResults(
      makePayload({ total: 25, page: 1 }),
      results,
      pagination,
      status,
      onPage,
    );
    const buttons = pagination.querySelectorAll<HTMLButtonElement>("button");
    buttons[2].click();
    expect(onPage).toHaveBeenCalledTimes(1);
    expect(onPage).toHaveBeenCalledWith(3);
  });

  it("replaces stale results on rerender", () => {
    const { results, pagination, status } = mount();
    renderResults(
      makePayload({ total: 25 }),
      results,
      pagination,
      status,
      () => {},
    );
    renderResults(
      makePayload({ total: 0, hits: [] }),
      results,
      pagination,
      status,
      () => {},
    );
    expect(results.children).toHaveLength(0);
    expect(pagination.children).toHaveLength(0);
  });
});

describe("error rendering", () => {
  it("shows the server's error text inline", () => {
    const { status } = mount();
    renderServerError(status, "unknown field: 'body'");
    expect(status.querySelector(".error")!.textContent).toBe(
      "unknown field: 'body'",
    );
    expect(status.querySelector("#retry")).toBeNull();
  });

  it("offers a retry button on network failure", () => {
    const { status } = mount();
    const onRetry = vi.fn();
    renderNetworkError(status, onRetry);
    const retry = status.querySelector<HTMLButtonElement>("#retry")!;
    retry.click();
    expect(onRetry).toHaveBeenCalledTimes(1);
  });
});
