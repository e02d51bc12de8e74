/**
 * Typed client for the authoring service HTTP API.
 *
 * Every call goes through one injectable fetch function so tests can record
 * the exact requests the UI makes. Mutations carry the caller's revision
 * token when one is supplied; a stale token surfaces as an ApiError with
 * status 409 that callers roll back on.
 */

import type {
  ConflictReport,
  DiffResponse,
  EmphasisLevel,
  EntriesResponse,
  ErrorEnvelope,
  Granularity,
  HideResponse,
  JargonCheckResponse,
  LineageResponse,
  PresentationBody,
  PresentationListing,
  SearchResponse,
  SaveResponse,
  SectionBody,
  SlideBody,
  SlideElement,
  SyncDecisionKind,
  SyncResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly details: unknown;

  constructor(status: number, code: string, message: string, details: unknown = null) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
    this.details = details;
  }
}

/**
 * Serialize one sync decision exactly as the service expects it.
 *
 * The payload is the decision name alone, plus the selected version indices
 * for replace_content. Nothing else is ever included, so the bytes on the
 * wire are stable: {"decision":"keep_both"} and friends.
 */
export function syncDecisionPayload(
  kind: SyncDecisionKind,
  targetVersionIndices?: number[],
): string {
  if (targetVersionIndices !== undefined) {
    return JSON.stringify({
      decision: kind,
      target_version_indices: targetVersionIndices,
    });
  }
  return JSON.stringify({ decision: kind });
}

interface RequestOptions {
  method: string;
  body?: string;
  contentType?: string;
}

export class DeckApi {
  readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private async request<T>(path: string, options?: RequestOptions): Promise<T> {
    const init: RequestInit = { method: options?.method ?? "GET" };
    if (options?.body !== undefined) {
      init.body = options.body;
      init.headers = { "Content-Type": options.contentType ?? "application/json" };
    }
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) {
      throw await toApiError(response);
    }
    return (await response.json()) as T;
  }

  private json<T>(path: string, method: string, body: Record<string, unknown>): Promise<T> {
    return this.request<T>(path, { method, body: JSON.stringify(body) });
  }

  // --- Health ---

  health(): Promise<{ status: string }> {
    return this.request("/healthz");
  }

  // --- Presentations ---

  createPresentation(body: {
    title: string;
    total_duration_s: number;
    audience: { description: string; expertise_level: number };
    topic?: string | null;
  }): Promise<PresentationBody> {
    return this.json("/presentations", "POST", body);
  }

  listPresentations(): Promise<PresentationListing> {
    return this.request("/presentations");
  }

  getPresentation(presentationId: string): Promise<PresentationBody> {
    return this.request(`/presentations/${presentationId}`);
  }

  patchPresentation(
    presentationId: string,
    patch: {
      title?: string;
      total_duration_s?: number;
      audience?: { description: string; expertise_level: number };
      topic?: string | null;
    },
    revision?: number,
  ): Promise<PresentationBody> {
    return this.json(`/presentations/${presentationId}`, "PATCH", withRevision(patch, revision));
  }

  // --- Sections ---

  addSection(
    presentationId: string,
    body: {
      title: string;
      duration_s?: number;
      emphasis?: EmphasisLevel;
      position?: number;
    },
    revision?: number,
  ): Promise<SectionBody> {
    return this.json(
      `/presentations/${presentationId}/sections`,
      "POST",
      withRevision(body, revision),
    );
  }

  patchSection(
    sectionId: string,
    patch: { title?: string; duration_s?: number; emphasis?: EmphasisLevel },
    revision?: number,
  ): Promise<SectionBody> {
    return this.json(`/sections/${sectionId}`, "PATCH", withRevision(patch, revision));
  }

  reorderSections(
    presentationId: string,
    order: string[],
    revision?: number,
  ): Promise<PresentationBody> {
    return this.json(
      `/presentations/${presentationId}/section-order`,
      "PUT",
      withRevision({ order }, revision),
    );
  }

  // --- Slides ---

  addSlide(
    sectionId: string,
    body: { title?: string | null; elements?: SlideElement[]; position?: number },
    revision?: number,
  ): Promise<SlideBody> {
    return this.json(`/sections/${sectionId}/slides`, "POST", withRevision(body, revision));
  }

  patchSlide(
    slideId: string,
    patch: { title?: string | null; elements?: SlideElement[] },
    revision?: number,
  ): Promise<SlideBody> {
    return this.json(`/slides/${slideId}`, "PATCH", withRevision(patch, revision));
  }

  moveSlide(
    slideId: string,
    targetSectionId: string,
    position?: number,
    revision?: number,
  ): Promise<PresentationBody> {
    const body: Record<string, unknown> = { target_section_id: targetSectionId };
    if (position !== undefined) {
      body.position = position;
    }
    return this.json(`/slides/${slideId}/move`, "PUT", withRevision(body, revision));
  }

  // --- Conflict reports ---

  getConflicts(presentationId: string): Promise<ConflictReport> {
    return this.request(`/presentations/${presentationId}/conflicts`);
  }

  // --- Repository ---

  repositorySave(
    body: {
      granularity: Granularity;
      presentation_id: string;
      section_id?: string;
      slide_id?: string;
    },
    revision?: number,
  ): Promise<SaveResponse> {
    return this.json("/repository/save", "POST", withRevision(body, revision));
  }

  repositoryEntries(): Promise<EntriesResponse> {
    return this.request("/repository/entries");
  }

  search(query: string, granularity?: Granularity): Promise<SearchResponse> {
    const params = new URLSearchParams({ q: query });
    if (granularity !== undefined) {
      params.set("granularity", granularity);
    }
    return this.request(`/repository/search?${params.toString()}`);
  }

  repositoryImport(
    body: {
      entry_id: string;
      presentation_id?: string;
      section_id?: string;
      position?: number;
    },
    revision?: number,
  ): Promise<PresentationBody | SectionBody | SlideBody> {
    return this.json("/repository/import", "POST", withRevision(body, revision));
  }

  reuseSlide(
    body: {
      presentation_id: string;
      section_id: string;
      lineage_id: string;
      version_index: number;
      position?: number;
    },
    revision?: number,
  ): Promise<SlideBody> {
    return this.json("/repository/reuse-slide", "POST", withRevision(body, revision));
  }

  getLineage(lineageId: string): Promise<LineageResponse> {
    return this.request(`/lineages/${lineageId}`);
  }

  // --- Diff and sync ---

  getDiff(slideId: string): Promise<DiffResponse> {
    return this.request(`/slides/${slideId}/diff`);
  }

  /**
   * Post a prebuilt sync decision payload without re-encoding it, so the
   * request body is exactly the string the comparison panel produced.
   */
  syncSlide(slideId: string, payload: string): Promise<SyncResponse> {
    return this.request(`/slides/${slideId}/sync`, { method: "POST", body: payload });
  }

  // --- Jargon ---

  jargonCheck(slideId: string, presentationContext?: string): Promise<JargonCheckResponse> {
    const body: Record<string, unknown> = {};
    if (presentationContext !== undefined) {
      body.presentation_context = presentationContext;
    }
    return this.json(`/slides/${slideId}/jargon-check`, "POST", body);
  }

  hideTerm(slideId: string, term: string): Promise<HideResponse> {
    return this.json(`/slides/${slideId}/jargon-hide`, "POST", { term });
  }

  hideAll(slideId: string): Promise<HideResponse> {
    return this.json(`/slides/${slideId}/jargon-hide`, "POST", { all: true });
  }

  resetHidden(slideId: string): Promise<HideResponse> {
    return this.json(`/slides/${slideId}/jargon-hide`, "POST", { reset: true });
  }

  // --- Assets ---

  async uploadAsset(data: Blob | ArrayBuffer | Uint8Array): Promise<{ sha256: string }> {
    const response = await this.fetchImpl(`${this.baseUrl}/assets`, {
      method: "POST",
      body: data as BodyInit,
      headers: { "Content-Type": "application/octet-stream" },
    });
    if (!response.ok) {
      throw await toApiError(response);
    }
    return (await response.json()) as { sha256: string };
  }

  assetUrl(digest: string): string {
    return `${this.baseUrl}/assets/${digest}`;
  }
}

function withRevision(
  body: Record<string, unknown>,
  revision?: number,
): Record<string, unknown> {
  if (revision === undefined) {
    return body;
  }
  return { ...body, revision };
}

async function toApiError(response: Response): Promise<ApiError> {
  let envelope: ErrorEnvelope | null = null;
  try {
    envelope = (await response.json()) as ErrorEnvelope;
  } catch {
    envelope = null;
  }
  if (envelope && typeof envelope === "object" && envelope.error) {
    const { code, message, details } = envelope.error;
    return new ApiError(response.status, code, message, details);
  }
  return new ApiError(response.status, "http_error", `HTTP ${response.status}`);
}
