/**
 * Client view state: which of the two views is active and what is selected.
 *
 * Exactly one view is active at a time. Selections always reference entities
 * present in the currently fetched presentation; switching to the slide
 * editor without a valid slide is rejected, and a refreshed presentation
 * drops any selection that no longer exists.
 */

import type { DiffResponse, Presentation } from "./types.js";

export type ActiveView = "timeline" | "editor";

export interface ViewState {
  view: ActiveView;
  selectedSectionId: string | null;
  selectedSlideId: string | null;
  /** Diff currently shown in the comparison panel, if any. */
  pendingDiff: DiffResponse | null;
}

export function initialViewState(): ViewState {
  return {
    view: "timeline",
    selectedSectionId: null,
    selectedSlideId: null,
    pendingDiff: null,
  };
}

export function sectionExists(presentation: Presentation, sectionId: string): boolean {
  return presentation.sections.some((s) => s.id === sectionId);
}

export function slideExists(presentation: Presentation, slideId: string): boolean {
  return presentation.sections.some((s) => s.slides.some((sl) => sl.id === slideId));
}

export function showTimeline(state: ViewState): ViewState {
  return { ...state, view: "timeline", pendingDiff: null };
}

/**
 * Open the slide editor on one slide. Throws if the slide is not part of
 * the fetched presentation; stale ids never become selections.
 */
export function openEditor(
  state: ViewState,
  presentation: Presentation,
  slideId: string,
): ViewState {
  const section = presentation.sections.find((s) =>
    s.slides.some((sl) => sl.id === slideId),
  );
  if (!section) {
    throw new Error(`slide ${slideId} is not in the fetched presentation`);
  }
  return {
    ...state,
    view: "editor",
    selectedSectionId: section.id,
    selectedSlideId: slideId,
    pendingDiff: null,
  };
}

export function selectSection(
  state: ViewState,
  presentation: Presentation,
  sectionId: string,
): ViewState {
  if (!sectionExists(presentation, sectionId)) {
    throw new Error(`section ${sectionId} is not in the fetched presentation`);
  }
  return { ...state, selectedSectionId: sectionId };
}

export function openDiffPanel(state: ViewState, diff: DiffResponse): ViewState {
  return { ...state, pendingDiff: diff };
}

export function closeDiffPanel(state: ViewState): ViewState {
  return { ...state, pendingDiff: null };
}

/**
 * Reconcile selections after the presentation was refetched: anything that
 * vanished server-side is dropped, and the editor falls back to the
 * timeline when its slide is gone.
 */
export function reconcile(state: ViewState, presentation: Presentation): ViewState {
  let next = state;
  if (next.selectedSlideId !== null && !slideExists(presentation, next.selectedSlideId)) {
    next = { ...next, selectedSlideId: null, pendingDiff: null };
    if (next.view === "editor") {
      next = { ...next, view: "timeline" };
    }
  }
  if (
    next.selectedSectionId !== null &&
    !sectionExists(presentation, next.selectedSectionId)
  ) {
    next = { ...next, selectedSectionId: null };
  }
  return next;
}
