/**
 * Jargon side panel and in-place highlights for the slide editor.
 *
 * The server sends the canonical slide text plus flagged terms with
 * character offsets. Highlights are cut from the text at exactly those
 * offsets; the term string itself is never searched for client-side, so
 * the marks always cover [start_index, end_index) of the server's text.
 */

import type { JargonCheckResponse, JargonTerm } from "./types.js";

export interface TextSegment {
  text: string;
  /** The term covering this segment, or null for plain text. */
  term: JargonTerm | null;
}

/**
 * Split slide text into plain and highlighted segments. Terms are applied
 * in offset order; a term overlapping an earlier one is skipped here (the
 * panel still lists it).
 */
export function highlightSegments(slideText: string, terms: JargonTerm[]): TextSegment[] {
  const ordered = [...terms].sort((a, b) => a.start_index - b.start_index);
  const segments: TextSegment[] = [];
  let cursor = 0;
  for (const term of ordered) {
    if (term.start_index < cursor || term.end_index > slideText.length) {
      continue;
    }
    if (term.start_index > cursor) {
      segments.push({ text: slideText.slice(cursor, term.start_index), term: null });
    }
    segments.push({
      text: slideText.slice(term.start_index, term.end_index),
      term,
    });
    cursor = term.end_index;
  }
  if (cursor < slideText.length) {
    segments.push({ text: slideText.slice(cursor), term: null });
  }
  return segments;
}

export interface JargonHandlers {
  hideTerm?: (term: string) => Promise<void>;
  hideAll?: () => Promise<void>;
  reset?: () => Promise<void>;
  onError?: (message: string) => void;
}

export function renderJargonPanel(
  container: HTMLElement,
  check: JargonCheckResponse,
  handlers: JargonHandlers = {},
): void {
  const doc = container.ownerDocument;
  container.replaceChildren();

  const textView = doc.createElement("div");
  textView.className = "slide-text";
  for (const segment of highlightSegments(check.slide_text, check.terms)) {
    if (segment.term === null) {
      textView.appendChild(doc.createTextNode(segment.text));
    } else {
      const mark = doc.createElement("mark");
      mark.className = "jargon-highlight";
      mark.dataset.term = segment.term.term;
      mark.dataset.startIndex = String(segment.term.start_index);
      mark.dataset.endIndex = String(segment.term.end_index);
      mark.textContent = segment.text;
      textView.appendChild(mark);
    }
  }
  container.appendChild(textView);

  const panel = doc.createElement("aside");
  panel.className = "jargon-panel";

  const head = doc.createElement("div");
  head.className = "jargon-panel-head";
  const audience = doc.createElement("p");
  audience.className = "jargon-audience";
  audience.textContent =
    `${check.context.domain_background} ` +
    `(expertise level ${check.context.inferred_expertise_level})`;
  head.appendChild(audience);

  const hideAllButton = doc.createElement("button");
  hideAllButton.className = "jargon-hide-all";
  hideAllButton.textContent = "Hide all";
  hideAllButton.addEventListener("click", () => {
    handlers.hideAll?.().catch((err: unknown) => reportError(handlers, err));
  });
  head.appendChild(hideAllButton);

  const resetButton = doc.createElement("button");
  resetButton.className = "jargon-reset";
  resetButton.textContent = "Reset hidden";
  resetButton.addEventListener("click", () => {
    handlers.reset?.().catch((err: unknown) => reportError(handlers, err));
  });
  head.appendChild(resetButton);
  panel.appendChild(head);

  if (check.terms.length === 0) {
    const empty = doc.createElement("p");
    empty.className = "jargon-empty";
    empty.textContent = "No terms flagged for this audience.";
    panel.appendChild(empty);
  }

  for (const term of check.terms) {
    const row = doc.createElement("div");
    row.className = "jargon-row";
    row.dataset.term = term.term;

    const name = doc.createElement("strong");
    name.className = "jargon-term";
    name.textContent = term.term;
    row.appendChild(name);

    const definition = doc.createElement("p");
    definition.className = "jargon-definition";
    definition.textContent = term.definition;
    row.appendChild(definition);

    const alternatives = doc.createElement("ul");
    alternatives.className = "jargon-alternatives";
    for (const alt of term.alternatives) {
      const li = doc.createElement("li");
      li.textContent = alt;
      alternatives.appendChild(li);
    }
    row.appendChild(alternatives);

    const hide = doc.createElement("button");
    hide.className = "jargon-hide";
    hide.textContent = "Hide";
    hide.addEventListener("click", () => {
      handlers.hideTerm?.(term.term).catch((err: unknown) => reportError(handlers, err));
    });
    row.appendChild(hide);

    panel.appendChild(row);
  }

  container.appendChild(panel);
}

/** Provider failures render a retriable error state instead of the panel. */
export function renderJargonError(
  container: HTMLElement,
  message: string,
  onRetry: () => void,
): void {
  const doc = container.ownerDocument;
  container.replaceChildren();
  const box = doc.createElement("div");
  box.className = "jargon-error";
  const text = doc.createElement("p");
  text.textContent = message;
  box.appendChild(text);
  const retry = doc.createElement("button");
  retry.className = "jargon-retry";
  retry.textContent = "Retry";
  retry.addEventListener("click", onRetry);
  box.appendChild(retry);
  container.appendChild(box);
}

function reportError(handlers: JargonHandlers, err: unknown): void {
  const message = err instanceof Error && err.message ? err.message : "request failed";
  handlers.onError?.(message);
}
