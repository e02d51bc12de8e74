/**
 * Timeline overview: one vertical bar per section, colored by the server's
 * conflict report, with accumulated times, inline duration editing, and
 * drag-to-reorder.
 *
 * Colors are taken from the report as-is. The view model never recomputes
 * conflict levels or overflow from durations; a section is painted exactly
 * the color the report's level and overflow flag map to.
 */

import { COLOR_VALUES, colorForLevel, type ConflictColor } from "./colors.js";
import type {
  ConflictLevel,
  ConflictPair,
  ConflictReport,
  Presentation,
  Section,
  SectionReport,
} from "./types.js";

export interface TimelineBar {
  sectionId: string;
  title: string;
  durationS: number | null;
  emphasis: string;
  /** Accumulated start/end labels, in seconds from the start of the talk. */
  startS: number;
  endS: number;
  conflictLevel: ConflictLevel;
  overflow: boolean;
  pairs: ConflictPair[];
  color: ConflictColor;
  section: Section;
}

export interface TimelineViewModel {
  bars: TimelineBar[];
  totalDurationS: number;
  sumDurationS: number;
}

const NO_REPORT: Pick<SectionReport, "conflict_level" | "overflow" | "pairs"> = {
  conflict_level: "none",
  overflow: false,
  pairs: [],
};

export function timelineViewModel(
  presentation: Presentation,
  report: ConflictReport,
): TimelineViewModel {
  const reportById = new Map(report.sections.map((s) => [s.id, s]));
  let cursor = 0;
  const bars = presentation.sections.map((section) => {
    const sectionReport = reportById.get(section.id) ?? { id: section.id, ...NO_REPORT };
    const startS = cursor;
    cursor += section.duration_s ?? 0;
    return {
      sectionId: section.id,
      title: section.title,
      durationS: section.duration_s,
      emphasis: section.emphasis,
      startS,
      endS: cursor,
      conflictLevel: sectionReport.conflict_level,
      overflow: sectionReport.overflow,
      pairs: sectionReport.pairs,
      color: colorForLevel(sectionReport.conflict_level, sectionReport.overflow),
      section,
    };
  });
  return {
    bars,
    totalDurationS: report.total_duration_s,
    sumDurationS: report.sum_duration_s,
  };
}

/** Move `fromId` so it lands at `toId`'s position, shifting the rest. */
export function reorderIds(ids: string[], fromId: string, toId: string): string[] {
  const fromIndex = ids.indexOf(fromId);
  const toIndex = ids.indexOf(toId);
  if (fromIndex < 0 || toIndex < 0 || fromIndex === toIndex) {
    return [...ids];
  }
  const next = [...ids];
  next.splice(fromIndex, 1);
  next.splice(toIndex, 0, fromId);
  return next;
}

export interface TimelineHandlers {
  /** Persist an inline duration edit. Rejections roll the input back. */
  changeDuration?: (sectionId: string, durationS: number) => Promise<void>;
  /** Persist a drag-to-reorder as the full new section id order. */
  reorder?: (order: string[]) => Promise<void>;
  /** Open a slide in the editor. */
  openSlide?: (slideId: string) => void;
  /** Surface a failed write without blocking the view. */
  onError?: (message: string) => void;
}

export function renderTimeline(
  container: HTMLElement,
  presentation: Presentation,
  report: ConflictReport,
  handlers: TimelineHandlers = {},
): TimelineViewModel {
  const doc = container.ownerDocument;
  const model = timelineViewModel(presentation, report);
  container.replaceChildren();

  const header = doc.createElement("div");
  header.className = "timeline-header";
  const heading = doc.createElement("h2");
  heading.textContent = presentation.title;
  header.appendChild(heading);
  const allocation = doc.createElement("span");
  allocation.className = "timeline-allocation";
  allocation.textContent = `${model.sumDurationS}s of ${model.totalDurationS}s allocated`;
  if (model.sumDurationS > model.totalDurationS) {
    allocation.classList.add("over-allocated");
  }
  header.appendChild(allocation);
  container.appendChild(header);

  const row = doc.createElement("div");
  row.className = "timeline-bars";
  container.appendChild(row);

  const order = model.bars.map((bar) => bar.sectionId);
  let dragSectionId: string | null = null;

  for (const bar of model.bars) {
    const el = doc.createElement("div");
    el.className = `timeline-bar bar-${bar.color}`;
    el.dataset.sectionId = bar.sectionId;
    el.dataset.color = bar.color;
    el.dataset.conflictLevel = bar.conflictLevel;
    if (bar.overflow) {
      el.dataset.overflow = "true";
    }
    el.style.backgroundColor = COLOR_VALUES[bar.color];
    el.draggable = true;

    const title = doc.createElement("div");
    title.className = "bar-title";
    title.textContent = bar.title;
    el.appendChild(title);

    const meta = doc.createElement("div");
    meta.className = "bar-meta";
    meta.textContent = `${bar.startS}s to ${bar.endS}s, emphasis ${bar.emphasis}`;
    el.appendChild(meta);

    if (bar.overflow) {
      const badge = doc.createElement("span");
      badge.className = "bar-overflow-badge";
      badge.textContent = "over time";
      el.appendChild(badge);
    }

    const duration = doc.createElement("input");
    duration.type = "number";
    duration.min = "0";
    duration.className = "bar-duration";
    duration.value = bar.durationS === null ? "" : String(bar.durationS);
    duration.addEventListener("change", () => {
      const previous = bar.durationS === null ? "" : String(bar.durationS);
      const parsed = Number.parseInt(duration.value, 10);
      if (!Number.isFinite(parsed) || parsed < 0) {
        duration.value = previous;
        return;
      }
      handlers.changeDuration?.(bar.sectionId, parsed).catch((err: unknown) => {
        duration.value = previous;
        handlers.onError?.(errorText(err, "duration change failed"));
      });
    });
    el.appendChild(duration);

    const thumbs = doc.createElement("div");
    thumbs.className = "bar-slides";
    for (const slide of bar.section.slides) {
      const thumb = doc.createElement("div");
      thumb.className = "slide-thumb";
      thumb.dataset.slideId = slide.id;
      const thumbTitle = doc.createElement("div");
      thumbTitle.className = "slide-thumb-title";
      thumbTitle.textContent = slide.title ?? "Untitled";
      thumb.appendChild(thumbTitle);
      const firstText = slide.elements.find((e) => e.kind === "text");
      if (firstText) {
        const body = doc.createElement("div");
        body.className = "slide-thumb-body";
        body.textContent = firstText.content.slice(0, 60);
        thumb.appendChild(body);
      }
      thumb.addEventListener("click", () => handlers.openSlide?.(slide.id));
      thumbs.appendChild(thumb);
    }
    el.appendChild(thumbs);

    el.addEventListener("dragstart", (event) => {
      dragSectionId = bar.sectionId;
      event.dataTransfer?.setData("text/plain", bar.sectionId);
    });
    el.addEventListener("dragover", (event) => event.preventDefault());
    el.addEventListener("drop", (event) => {
      event.preventDefault();
      const fromId = event.dataTransfer?.getData("text/plain") || dragSectionId;
      dragSectionId = null;
      if (!fromId || fromId === bar.sectionId) {
        return;
      }
      const next = reorderIds(order, fromId, bar.sectionId);
      handlers.reorder?.(next).catch((err: unknown) => {
        handlers.onError?.(errorText(err, "reorder failed"));
      });
    });

    row.appendChild(el);
  }

  return model;
}

function errorText(err: unknown, fallback: string): string {
  if (err instanceof Error && err.message) {
    return err.message;
  }
  return fallback;
}
