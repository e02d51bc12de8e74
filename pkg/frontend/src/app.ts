/**
 * Top-level wiring: owns the fetched presentation, the conflict report,
 * and the view state, and renders whichever view is active.
 *
 * All writes are optimistic against the last known revision. A 409 answer
 * means someone else committed first; the app refreshes to the server's
 * state, surfaces a banner, and lets the caller's rollback undo any local
 * preview.
 */

import { ApiError, DeckApi } from "./api.js";
import { showBanner } from "./banner.js";
import { renderComparisonPanel } from "./comparison.js";
import { renderJargonError, renderJargonPanel } from "./jargon.js";
import { renderRepositoryBrowser } from "./repository.js";
import { renderSectionDialog } from "./sections.js";
import {
  initialViewState,
  openEditor,
  reconcile,
  showTimeline,
  type ViewState,
} from "./state.js";
import { renderTimeline } from "./timeline.js";
import type {
  ConflictReport,
  PresentationBody,
  SearchHit,
  Slide,
  SlideElement,
} from "./types.js";

export class AuthoringApp {
  private readonly api: DeckApi;
  private readonly root: HTMLElement;
  private body: PresentationBody | null = null;
  private report: ConflictReport | null = null;
  private state: ViewState = initialViewState();

  constructor(root: HTMLElement, api: DeckApi) {
    this.root = root;
    this.api = api;
  }

  get presentationBody(): PresentationBody | null {
    return this.body;
  }

  get viewState(): ViewState {
    return this.state;
  }

  async open(presentationId: string): Promise<void> {
    this.body = await this.api.getPresentation(presentationId);
    this.report = await this.api.getConflicts(presentationId);
    this.state = initialViewState();
    this.render();
  }

  async refresh(): Promise<void> {
    if (this.body === null) {
      return;
    }
    const id = this.body.presentation.id;
    this.body = await this.api.getPresentation(id);
    this.report = await this.api.getConflicts(id);
    this.state = reconcile(this.state, this.body.presentation);
    this.render();
  }

  render(): void {
    if (this.body === null || this.report === null) {
      return;
    }
    this.root.replaceChildren();
    if (this.state.view === "timeline") {
      this.renderTimelineView();
    } else {
      this.renderEditorView();
    }
  }

  // --- Timeline view ---

  private renderTimelineView(): void {
    const doc = this.root.ownerDocument;
    const body = this.body!;
    const timelineHost = doc.createElement("section");
    timelineHost.className = "view view-timeline";
    this.root.appendChild(timelineHost);

    renderTimeline(timelineHost, body.presentation, this.report!, {
      changeDuration: (sectionId, durationS) =>
        this.guardedWrite(() =>
          this.api.patchSection(sectionId, { duration_s: durationS }, body.revision),
        ),
      reorder: (order) =>
        this.guardedWrite(() =>
          this.api.reorderSections(body.presentation.id, order, body.revision),
        ),
      openSlide: (slideId) => {
        this.state = openEditor(this.state, body.presentation, slideId);
        this.render();
      },
      onError: (message) => showBanner(message, { root: doc }),
    });

    const dialogHost = doc.createElement("section");
    dialogHost.className = "panel panel-sections";
    this.root.appendChild(dialogHost);
    renderSectionDialog(dialogHost, {
      createSections: async (titles) => {
        for (const title of titles) {
          await this.guardedWrite(() =>
            this.api.addSection(
              this.body!.presentation.id,
              { title },
              this.body!.revision,
            ),
          );
        }
      },
      onError: (message) => showBanner(message, { root: doc }),
    });

    const repoHost = doc.createElement("section");
    repoHost.className = "panel panel-repository";
    this.root.appendChild(repoHost);
    const sections = body.presentation.sections.map((s) => ({ id: s.id, title: s.title }));
    renderRepositoryBrowser(repoHost, this.api, sections, {
      importEntry: async (hit: SearchHit & { kind: "entry" }) => {
        await this.guardedWrite(() =>
          this.api.repositoryImport(
            hit.granularity === "presentation"
              ? { entry_id: hit.entry_id }
              : { entry_id: hit.entry_id, presentation_id: body.presentation.id },
            hit.granularity === "presentation" ? undefined : body.revision,
          ),
        );
      },
      reuseSlide: async (hit, targetSectionId) => {
        await this.guardedWrite(() =>
          this.api.reuseSlide(
            {
              presentation_id: body.presentation.id,
              section_id: targetSectionId,
              lineage_id: hit.lineage_id,
              version_index: hit.version_index,
            },
            body.revision,
          ),
        );
      },
      onError: (message) => showBanner(message, { root: doc }),
    });
  }

  // --- Slide editor view ---

  private renderEditorView(): void {
    const doc = this.root.ownerDocument;
    const body = this.body!;
    const slide = this.selectedSlide();
    if (slide === null) {
      this.state = showTimeline(this.state);
      this.renderTimelineView();
      return;
    }

    const editor = doc.createElement("section");
    editor.className = "view view-editor";
    editor.dataset.slideId = slide.id;
    this.root.appendChild(editor);

    const back = doc.createElement("button");
    back.className = "editor-back";
    back.textContent = "Back to timeline";
    back.addEventListener("click", () => {
      this.state = showTimeline(this.state);
      this.render();
    });
    editor.appendChild(back);

    const titleInput = doc.createElement("input");
    titleInput.type = "text";
    titleInput.className = "editor-title";
    titleInput.value = slide.title ?? "";
    editor.appendChild(titleInput);

    const elementInputs: { element: SlideElement; area: HTMLTextAreaElement }[] = [];
    for (const element of slide.elements) {
      if (element.kind !== "text") {
        continue;
      }
      const area = doc.createElement("textarea");
      area.className = "editor-element";
      area.dataset.elementId = element.id;
      area.value = element.content;
      editor.appendChild(area);
      elementInputs.push({ element, area });
    }

    const save = doc.createElement("button");
    save.className = "editor-save";
    save.textContent = "Save slide";
    save.addEventListener("click", () => {
      const elements = slide.elements.map((element) => {
        const edited = elementInputs.find((e) => e.element.id === element.id);
        return edited ? { ...element, content: edited.area.value } : element;
      });
      void this.guardedWrite(() =>
        this.api.patchSlide(
          slide.id,
          { title: titleInput.value === "" ? null : titleInput.value, elements },
          body.revision,
        ),
      ).catch((err: unknown) => this.reportError(err));
    });
    editor.appendChild(save);

    const saveToRepo = doc.createElement("button");
    saveToRepo.className = "editor-save-repo";
    saveToRepo.textContent = "Save to repository";
    saveToRepo.addEventListener("click", () => {
      void this.guardedWrite(() =>
        this.api.repositorySave(
          {
            granularity: "slide",
            presentation_id: body.presentation.id,
            slide_id: slide.id,
          },
          body.revision,
        ),
      ).catch((err: unknown) => this.reportError(err));
    });
    editor.appendChild(saveToRepo);

    const jargonHost = doc.createElement("div");
    jargonHost.className = "panel panel-jargon";
    editor.appendChild(jargonHost);

    const checkButton = doc.createElement("button");
    checkButton.className = "editor-jargon-check";
    checkButton.textContent = "Check jargon";
    checkButton.addEventListener("click", () => {
      void this.runJargonCheck(slide.id, jargonHost);
    });
    editor.appendChild(checkButton);

    const comparisonHost = doc.createElement("div");
    comparisonHost.className = "panel panel-comparison";
    editor.appendChild(comparisonHost);

    const compareButton = doc.createElement("button");
    compareButton.className = "editor-compare";
    compareButton.textContent = "Compare with saved version";
    compareButton.addEventListener("click", () => {
      void this.runComparison(slide.id, comparisonHost);
    });
    editor.appendChild(compareButton);
  }

  private async runJargonCheck(slideId: string, host: HTMLElement): Promise<void> {
    const doc = host.ownerDocument;
    try {
      const check = await this.api.jargonCheck(slideId);
      renderJargonPanel(host, check, {
        hideTerm: async (term) => {
          await this.api.hideTerm(slideId, term);
          await this.runJargonCheck(slideId, host);
        },
        hideAll: async () => {
          await this.api.hideAll(slideId);
          await this.runJargonCheck(slideId, host);
        },
        reset: async () => {
          await this.api.resetHidden(slideId);
          await this.runJargonCheck(slideId, host);
        },
        onError: (message) => showBanner(message, { root: doc }),
      });
    } catch (err) {
      const message =
        err instanceof ApiError && err.code === "provider_error"
          ? "The jargon provider is unavailable."
          : err instanceof Error
            ? err.message
            : "jargon check failed";
      renderJargonError(host, message, () => {
        void this.runJargonCheck(slideId, host);
      });
    }
  }

  private async runComparison(slideId: string, host: HTMLElement): Promise<void> {
    const doc = host.ownerDocument;
    try {
      const diff = await this.api.getDiff(slideId);
      if (!diff.dirty) {
        host.replaceChildren();
        showBanner("No changes against the saved version.", {
          kind: "info",
          root: doc,
        });
        return;
      }
      const lineage = await this.api.getLineage(diff.lineage_id);
      renderComparisonPanel(host, diff, lineage, {
        sync: (payload) => this.api.syncSlide(slideId, payload),
        onSynced: () => {
          void this.refresh();
        },
        onConflict: () => {
          showBanner("This deck changed elsewhere; refreshing.", { root: doc });
          void this.refresh();
        },
        onError: (message) => showBanner(message, { root: doc }),
      });
    } catch (err) {
      this.reportError(err);
    }
  }

  // --- Shared plumbing ---

  private selectedSlide(): Slide | null {
    const body = this.body;
    const slideId = this.state.selectedSlideId;
    if (body === null || slideId === null) {
      return null;
    }
    for (const section of body.presentation.sections) {
      for (const slide of section.slides) {
        if (slide.id === slideId) {
          return slide;
        }
      }
    }
    return null;
  }

  /**
   * Run one write against the current revision, then refresh. A 409 still
   * refreshes (to pick up the winning state) before rethrowing so callers
   * can roll back optimistic previews.
   */
  private async guardedWrite<T>(write: () => Promise<T>): Promise<void> {
    try {
      await write();
      await this.refresh();
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        showBanner("This deck changed elsewhere; refreshed to the latest version.", {
          root: this.root.ownerDocument,
        });
        await this.refresh();
      }
      throw err;
    }
  }

  private reportError(err: unknown): void {
    const message = err instanceof Error && err.message ? err.message : "request failed";
    showBanner(message, { root: this.root.ownerDocument });
  }
}
