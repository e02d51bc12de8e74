/**
 * Section creation: one dialog covering single, bulk, and placeholder
 * modes.
 *
 * Single mode creates one titled section, bulk mode creates one section per
 * non-blank line of the text box, and placeholder mode creates a counted
 * run of numbered stand-ins to be filled in later.
 */

export type SectionCreationMode = "single" | "bulk" | "placeholder";

export interface SectionCreationInput {
  mode: SectionCreationMode;
  /** Title for single mode. */
  title?: string;
  /** One title per line for bulk mode. */
  titles?: string;
  /** Number of placeholders for placeholder mode. */
  count?: number;
}

/** Expand a dialog submission into the list of section titles to create. */
export function planSectionCreation(input: SectionCreationInput): string[] {
  switch (input.mode) {
    case "single": {
      const title = (input.title ?? "").trim();
      return title === "" ? [] : [title];
    }
    case "bulk": {
      return (input.titles ?? "")
        .split("\n")
        .map((line) => line.trim())
        .filter((line) => line !== "");
    }
    case "placeholder": {
      const count = input.count ?? 0;
      if (!Number.isInteger(count) || count <= 0) {
        return [];
      }
      return Array.from({ length: count }, (_, i) => `Placeholder ${i + 1}`);
    }
  }
}

export interface SectionDialogHandlers {
  /** Create the planned sections in order. */
  createSections: (titles: string[]) => Promise<void>;
  onError?: (message: string) => void;
}

export function renderSectionDialog(
  container: HTMLElement,
  handlers: SectionDialogHandlers,
): { submit(): Promise<void> } {
  const doc = container.ownerDocument;
  container.replaceChildren();

  const dialog = doc.createElement("div");
  dialog.className = "section-dialog";

  const modeSelect = doc.createElement("select");
  modeSelect.className = "section-mode";
  for (const mode of ["single", "bulk", "placeholder"] as const) {
    const option = doc.createElement("option");
    option.value = mode;
    option.textContent = mode;
    modeSelect.appendChild(option);
  }
  dialog.appendChild(modeSelect);

  const titleInput = doc.createElement("input");
  titleInput.type = "text";
  titleInput.className = "section-title";
  titleInput.placeholder = "Section title";
  dialog.appendChild(titleInput);

  const titlesInput = doc.createElement("textarea");
  titlesInput.className = "section-titles";
  titlesInput.placeholder = "One section title per line";
  dialog.appendChild(titlesInput);

  const countInput = doc.createElement("input");
  countInput.type = "number";
  countInput.className = "section-count";
  countInput.min = "1";
  countInput.value = "1";
  dialog.appendChild(countInput);

  const showRelevantFields = (): void => {
    const mode = modeSelect.value as SectionCreationMode;
    titleInput.hidden = mode !== "single";
    titlesInput.hidden = mode !== "bulk";
    countInput.hidden = mode !== "placeholder";
  };
  showRelevantFields();
  modeSelect.addEventListener("change", showRelevantFields);

  const addButton = doc.createElement("button");
  addButton.className = "section-add";
  addButton.textContent = "Add sections";
  dialog.appendChild(addButton);

  container.appendChild(dialog);

  const controller = {
    async submit(): Promise<void> {
      const titles = planSectionCreation({
        mode: modeSelect.value as SectionCreationMode,
        title: titleInput.value,
        titles: titlesInput.value,
        count: Number.parseInt(countInput.value, 10),
      });
      if (titles.length === 0) {
        return;
      }
      try {
        await handlers.createSections(titles);
      } catch (err) {
        const message = err instanceof Error && err.message ? err.message : "create failed";
        handlers.onError?.(message);
      }
    },
  };

  addButton.addEventListener("click", () => {
    void controller.submit();
  });

  return controller;
}
