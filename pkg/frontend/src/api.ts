import { SearchState, buildSearchParams } from "./appState";

export interface SnippetPayload {
  text: string;
  highlights: [number, number][];
}

export interface HitPayload {
  arxiv_id: string;
  url: string;
  title: string;
  authors: string;
  score: number;
  matched_fields: string[];
  snippets: Record<string, SnippetPayload[]>;
}

export interface SearchPayload {
  total: number;
  page: number;
  size: number;
  hits: HitPayload[];
}

// A 4xx/5xx response; detail is the server's own error text.
export class ApiError extends Error {
  readonly status: number;

  constructor(status: number, detail: string) {
    super(detail);
    this.status = status;
    this.name = "ApiError";
  }
}

async function errorDetail(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (typeof body.detail === "string") {
      return body.detail;
    }
  } catch {
    // non-JSON error body, fall through
  }
  return `request failed with status ${response.status}`;
}

// Issues /api/search requests, keeping at most one in flight: starting a
// new search aborts the previous one.
export class SearchClient {
  private controller: AbortController | null = null;

  constructor(private readonly baseUrl: string = "") {}

  async search(state: SearchState, size?: number): Promise<SearchPayload> {
    if (this.controller !== null) {
      this.controller.abort();
    }
    const controller = new AbortController();
    this.controller = controller;
    try {
      const params = buildSearchParams(state, size);
      const response = await fetch(
        `${this.baseUrl}/api/search?${params.toString()}`,
        { signal: controller.signal },
      );
      if (!response.ok) {
        throw new ApiError(response.status, await errorDetail(response));
      }
      return (await response.json()) as SearchPayload;
    } finally {
      if (this.controller === controller) {
        this.controller = null;
      }
    }
  }
}

export function isAbortError(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}
