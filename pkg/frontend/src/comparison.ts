/**
 * Slide comparison panel: shows what changed against the saved lineage
 * version and offers the four sync resolutions.
 *
 * The panel only appears when the server says the slide is dirty. Each
 * action button posts the decision payload built by syncDecisionPayload,
 * nothing more, so the wire bytes match the service's sync contract
 * exactly. Replace Content stays disabled until at least one target
 * version is picked.
 */

import { ApiError, syncDecisionPayload } from "./api.js";
import type {
  DiffResponse,
  LineageResponse,
  SyncDecisionKind,
  SyncResponse,
} from "./types.js";

export const DECISION_LABELS: Record<SyncDecisionKind, string> = {
  ignore_changes: "Ignore Changes",
  set_as_origin: "Set as Origin",
  keep_both: "Keep Both Versions",
  replace_content: "Replace Content",
};

const DECISION_ORDER: SyncDecisionKind[] = [
  "ignore_changes",
  "set_as_origin",
  "keep_both",
  "replace_content",
];

export interface ComparisonHandlers {
  /** Post one sync decision payload for the slide under comparison. */
  sync: (payload: string) => Promise<SyncResponse>;
  /** Called after a successful sync so the app can refetch. */
  onSynced?: (response: SyncResponse) => void;
  /** A stale revision was rejected; the caller should refresh and retry. */
  onConflict?: () => void;
  onError?: (message: string) => void;
}

/**
 * Render the comparison panel for a dirty slide. Returns false without
 * rendering anything when the server reports no changes.
 */
export function renderComparisonPanel(
  container: HTMLElement,
  diff: DiffResponse,
  lineage: LineageResponse,
  handlers: ComparisonHandlers,
): boolean {
  container.replaceChildren();
  if (!diff.dirty) {
    return false;
  }

  const doc = container.ownerDocument;
  const panel = doc.createElement("div");
  panel.className = "comparison-panel";
  panel.dataset.slideId = diff.slide_id;

  const heading = doc.createElement("h3");
  heading.textContent = `Changes against saved version ${diff.version_index}`;
  panel.appendChild(heading);

  const markers = doc.createElement("ul");
  markers.className = "diff-markers";
  if (diff.diff.title_changed) {
    markers.appendChild(marker(doc, "diff-title", "title changed"));
  }
  for (const id of diff.diff.added) {
    markers.appendChild(marker(doc, "diff-added", `added element ${id}`, id));
  }
  for (const id of diff.diff.removed) {
    markers.appendChild(marker(doc, "diff-removed", `removed element ${id}`, id));
  }
  for (const mod of diff.diff.modified) {
    markers.appendChild(
      marker(
        doc,
        "diff-modified",
        `modified element ${mod.element_id} (${mod.changed_fields.join(", ")})`,
        mod.element_id,
      ),
    );
  }
  panel.appendChild(markers);

  const versions = doc.createElement("div");
  versions.className = "version-targets";
  const versionsLabel = doc.createElement("p");
  versionsLabel.textContent = "Versions to overwrite with Replace Content:";
  versions.appendChild(versionsLabel);
  for (const version of lineage.versions) {
    const label = doc.createElement("label");
    label.className = "version-target-row";
    const checkbox = doc.createElement("input");
    checkbox.type = "checkbox";
    checkbox.className = "version-target";
    checkbox.dataset.versionIndex = String(version.version_index);
    label.appendChild(checkbox);
    const caption = doc.createElement("span");
    caption.textContent = `v${version.version_index} saved ${version.saved_at}`;
    if (version.replaced_at !== null) {
      caption.textContent += ` (replaced ${version.replaced_at})`;
    }
    label.appendChild(caption);
    versions.appendChild(label);
  }
  panel.appendChild(versions);

  const actions = doc.createElement("div");
  actions.className = "sync-actions";
  const buttons = new Map<SyncDecisionKind, HTMLButtonElement>();
  for (const kind of DECISION_ORDER) {
    const button = doc.createElement("button");
    button.className = "sync-action";
    button.dataset.decision = kind;
    button.textContent = DECISION_LABELS[kind];
    actions.appendChild(button);
    buttons.set(kind, button);
  }
  panel.appendChild(actions);

  const selectedTargets = (): number[] =>
    Array.from(panel.querySelectorAll<HTMLInputElement>(".version-target"))
      .filter((box) => box.checked)
      .map((box) => Number.parseInt(box.dataset.versionIndex ?? "0", 10))
      .sort((a, b) => a - b);

  const replaceButton = buttons.get("replace_content")!;
  const refreshReplaceState = (): void => {
    replaceButton.disabled = selectedTargets().length === 0;
  };
  refreshReplaceState();
  versions.addEventListener("change", refreshReplaceState);

  const post = (payload: string): void => {
    void handlers
      .sync(payload)
      .then((response) => handlers.onSynced?.(response))
      .catch((err: unknown) => {
        if (err instanceof ApiError && err.status === 409) {
          handlers.onConflict?.();
          return;
        }
        const message = err instanceof Error && err.message ? err.message : "sync failed";
        handlers.onError?.(message);
      });
  };

  for (const kind of DECISION_ORDER) {
    const button = buttons.get(kind)!;
    button.addEventListener("click", () => {
      if (kind === "replace_content") {
        const targets = selectedTargets();
        if (targets.length === 0) {
          return;
        }
        post(syncDecisionPayload(kind, targets));
      } else {
        post(syncDecisionPayload(kind));
      }
    });
  }

  container.appendChild(panel);
  return true;
}

function marker(doc: Document, className: string, text: string, elementId?: string): HTMLLIElement {
  const li = doc.createElement("li");
  li.className = `diff-marker ${className}`;
  li.textContent = text;
  if (elementId !== undefined) {
    li.dataset.elementId = elementId;
  }
  return li;
}
