/**
 * Slide repository browser: keyword search over saved work with hover
 * previews and reuse actions.
 *
 * Results render in exactly the order the server returned them. Reusing a
 * slide requires choosing a target section first; empty queries never reach
 * the network.
 */

import type { Granularity, SearchHit, SearchResponse } from "./types.js";

export interface RepositorySearchApi {
  search(query: string, granularity?: Granularity): Promise<SearchResponse>;
}

export interface SectionChoice {
  id: string;
  title: string;
}

export interface RepositoryHandlers {
  /** Import an entry hit (presentation or section granularity). */
  importEntry?: (hit: SearchHit & { kind: "entry" }) => Promise<void>;
  /** Place a slide version into the chosen section of the open deck. */
  reuseSlide?: (
    hit: SearchHit & { kind: "slide" },
    targetSectionId: string,
  ) => Promise<void>;
  onError?: (message: string) => void;
}

export interface RepositoryBrowser {
  /** Run the search currently typed into the form. */
  runSearch(): Promise<void>;
}

const GRANULARITIES: Granularity[] = ["presentation", "section", "slide"];

export function renderRepositoryBrowser(
  container: HTMLElement,
  api: RepositorySearchApi,
  sections: SectionChoice[],
  handlers: RepositoryHandlers = {},
): RepositoryBrowser {
  const doc = container.ownerDocument;
  container.replaceChildren();

  const form = doc.createElement("div");
  form.className = "repo-search";

  const input = doc.createElement("input");
  input.type = "search";
  input.className = "search-query";
  input.placeholder = "Search saved slides, sections, decks";
  form.appendChild(input);

  const granularitySelect = doc.createElement("select");
  granularitySelect.className = "search-granularity";
  const anyOption = doc.createElement("option");
  anyOption.value = "";
  anyOption.textContent = "any granularity";
  granularitySelect.appendChild(anyOption);
  for (const g of GRANULARITIES) {
    const option = doc.createElement("option");
    option.value = g;
    option.textContent = g;
    granularitySelect.appendChild(option);
  }
  form.appendChild(granularitySelect);

  const runButton = doc.createElement("button");
  runButton.className = "search-run";
  runButton.textContent = "Search";
  form.appendChild(runButton);

  const hint = doc.createElement("span");
  hint.className = "search-hint";
  hint.hidden = true;
  form.appendChild(hint);

  container.appendChild(form);

  const results = doc.createElement("div");
  results.className = "repo-results";
  container.appendChild(results);

  const preview = doc.createElement("div");
  preview.className = "repo-preview";
  preview.hidden = true;
  container.appendChild(preview);

  const showHint = (message: string): void => {
    hint.textContent = message;
    hint.hidden = false;
  };

  const renderHits = (hits: SearchHit[]): void => {
    results.replaceChildren();
    if (hits.length === 0) {
      const empty = doc.createElement("p");
      empty.className = "repo-empty";
      empty.textContent = "No matches.";
      results.appendChild(empty);
      return;
    }
    hits.forEach((hit, index) => {
      results.appendChild(renderHit(doc, hit, index));
    });
  };

  const renderHit = (d: Document, hit: SearchHit, index: number): HTMLElement => {
    const row = d.createElement("div");
    row.className = `search-hit hit-${hit.kind}`;
    row.dataset.rank = String(index);
    row.dataset.granularity = hit.granularity;

    const snippet = d.createElement("span");
    snippet.className = "hit-snippet";
    snippet.textContent = hit.snippet;
    row.appendChild(snippet);

    const meta = d.createElement("span");
    meta.className = "hit-meta";
    meta.textContent = `${hit.granularity}, score ${hit.score}, saved ${hit.saved_at}`;
    row.appendChild(meta);

    row.addEventListener("mouseenter", () => {
      preview.hidden = false;
      preview.textContent = `${hit.granularity}: ${hit.snippet}`;
    });
    row.addEventListener("mouseleave", () => {
      preview.hidden = true;
      preview.textContent = "";
    });

    if (hit.kind === "entry") {
      row.dataset.entryId = hit.entry_id;
      const importButton = d.createElement("button");
      importButton.className = "hit-import";
      importButton.textContent = "Import";
      importButton.addEventListener("click", () => {
        handlers.importEntry?.(hit).catch((err: unknown) => report(err));
      });
      row.appendChild(importButton);
    } else {
      row.dataset.lineageId = hit.lineage_id;
      row.dataset.versionIndex = String(hit.version_index);

      const sectionSelect = d.createElement("select");
      sectionSelect.className = "reuse-section";
      const placeholder = d.createElement("option");
      placeholder.value = "";
      placeholder.textContent = "choose a section";
      sectionSelect.appendChild(placeholder);
      for (const section of sections) {
        const option = d.createElement("option");
        option.value = section.id;
        option.textContent = section.title;
        sectionSelect.appendChild(option);
      }
      row.appendChild(sectionSelect);

      const reuseButton = d.createElement("button");
      reuseButton.className = "hit-reuse";
      reuseButton.textContent = "Reuse";
      reuseButton.disabled = true;
      sectionSelect.addEventListener("change", () => {
        reuseButton.disabled = sectionSelect.value === "";
      });
      reuseButton.addEventListener("click", () => {
        if (sectionSelect.value === "") {
          return;
        }
        handlers.reuseSlide?.(hit, sectionSelect.value).catch((err: unknown) => report(err));
      });
      row.appendChild(reuseButton);
    }
    return row;
  };

  const report = (err: unknown): void => {
    const message = err instanceof Error && err.message ? err.message : "request failed";
    handlers.onError?.(message);
  };

  const browser: RepositoryBrowser = {
    async runSearch(): Promise<void> {
      const query = input.value.trim();
      if (query === "") {
        showHint("Type something to search for.");
        return;
      }
      hint.hidden = true;
      const granularity = granularitySelect.value as Granularity | "";
      try {
        const response = await api.search(
          query,
          granularity === "" ? undefined : granularity,
        );
        renderHits(response.hits);
      } catch (err) {
        report(err);
      }
    },
  };

  runButton.addEventListener("click", () => {
    void browser.runSearch();
  });
  input.addEventListener("keydown", (event) => {
    if (event.key === "Enter") {
      void browser.runSearch();
    }
  });

  return browser;
}
