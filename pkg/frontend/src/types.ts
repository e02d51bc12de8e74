/**
 * Wire types for the authoring service HTTP API.
 *
 * These mirror the JSON bodies the service produces verbatim. The UI never
 * derives conflict levels, diffs, or jargon offsets itself; it renders the
 * server's values, so these shapes are the whole contract.
 */

export type EmphasisLevel = "none" | "low" | "medium" | "high";
export type ConflictLevel = "none" | "low" | "medium" | "high";
export type Granularity = "presentation" | "section" | "slide";

// --- Deck documents ---

export interface ElementBounds {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface SlideElement {
  id: string;
  kind: "text" | "image";
  content: string;
  bounds: ElementBounds;
}

export interface LineageRef {
  lineage_id: string;
  version_index: number;
}

export interface Slide {
  id: string;
  title: string | null;
  lineage_ref: LineageRef | null;
  elements: SlideElement[];
}

export interface Section {
  id: string;
  title: string;
  duration_s: number | null;
  emphasis: EmphasisLevel;
  slides: Slide[];
}

export interface Audience {
  expertise_level: number;
  description: string;
}

export interface Presentation {
  id: string;
  title: string;
  total_duration_s: number;
  audience: Audience;
  topic: string | null;
  created_at: string;
  sections: Section[];
}

/** Body of GET /presentations/{id} and most presentation-level mutations. */
export interface PresentationBody {
  schema_version: number;
  presentation: Presentation;
  revision: number;
  dirty_slide_ids: string[];
}

export interface PresentationListing {
  presentations: { id: string; title: string; revision: number }[];
}

export interface SectionBody {
  section: Section;
  revision: number;
}

export interface SlideBody {
  slide: Slide;
  revision: number;
}

// --- Conflict reports ---

export interface ConflictPair {
  other_id: string;
  ratio: number;
}

export interface SectionReport {
  id: string;
  conflict_level: ConflictLevel;
  overflow: boolean;
  pairs: ConflictPair[];
}

/** Body of GET /presentations/{id}/conflicts. */
export interface ConflictReport {
  sections: SectionReport[];
  total_duration_s: number;
  sum_duration_s: number;
}

// --- Repository ---

export interface SaveResponse {
  entry_id: string;
  granularity: Granularity;
  saved_at: string;
  revision: number;
}

export interface EntrySummary {
  entry_id: string;
  granularity: Granularity;
  saved_at: string;
  source_presentation_id: string;
  title: string | null;
}

export interface EntriesResponse {
  entries: EntrySummary[];
}

export interface EntrySearchHit {
  kind: "entry";
  granularity: Granularity;
  score: number;
  saved_at: string;
  snippet: string;
  entry_id: string;
}

export interface SlideSearchHit {
  kind: "slide";
  granularity: Granularity;
  score: number;
  saved_at: string;
  snippet: string;
  lineage_id: string;
  version_index: number;
}

export type SearchHit = EntrySearchHit | SlideSearchHit;

export interface SearchResponse {
  hits: SearchHit[];
}

export interface LineageVersion {
  version_index: number;
  saved_at: string;
  replaced_at: string | null;
  slide: Slide;
}

export interface LineageResponse {
  lineage_id: string;
  versions: LineageVersion[];
}

// --- Diff and sync ---

export interface ModifiedElement {
  element_id: string;
  changed_fields: string[];
}

export interface SlideDiff {
  added: string[];
  removed: string[];
  modified: ModifiedElement[];
  title_changed: boolean;
}

/** Body of GET /slides/{id}/diff. */
export interface DiffResponse {
  slide_id: string;
  lineage_id: string;
  version_index: number;
  dirty: boolean;
  diff: SlideDiff;
}

export type SyncDecisionKind =
  | "ignore_changes"
  | "set_as_origin"
  | "keep_both"
  | "replace_content";

export interface SyncOutcome {
  lineage_id: string;
  version_index: number;
}

export interface SyncResponse {
  slide: Slide;
  outcome: SyncOutcome;
  revision: number;
}

// --- Jargon ---

export interface ExpandedContext {
  original_description: string;
  expanded_description: string;
  inferred_expertise_level: number;
  known_concepts: string[];
  likely_jargon: string[];
  domain_background: string;
}

export interface JargonTerm {
  term: string;
  definition: string;
  alternatives: string[];
  start_index: number;
  end_index: number;
  hidden: boolean;
}

/** Body of POST /slides/{id}/jargon-check. */
export interface JargonCheckResponse {
  slide_id: string;
  slide_text: string;
  context: ExpandedContext;
  terms: JargonTerm[];
}

export interface HideResponse {
  slide_id: string;
  hidden_terms: string[];
  all_hidden: boolean;
}

// --- Errors ---

export interface ErrorEnvelope {
  error: {
    code: string;
    message: string;
    details: unknown;
  };
}
