import { afterEach, describe, expect, it } from "vitest";

import { planSectionCreation, renderSectionDialog } from "../src/sections.js";
import { mount } from "./helpers.js";

afterEach(() => {
  document.body.replaceChildren();
});

describe("planSectionCreation", () => {
  it("single mode creates one trimmed title", () => {
    expect(planSectionCreation({ mode: "single", title: "  Opening  " })).toEqual(["Opening"]);
    expect(planSectionCreation({ mode: "single", title: "   " })).toEqual([]);
    expect(planSectionCreation({ mode: "single" })).toEqual([]);
  });

  it("bulk mode creates one section per non-blank line", () => {
    const titles = "Intro\n\n  Methods \nResults\n   \nClose";
    expect(planSectionCreation({ mode: "bulk", titles })).toEqual([
      "Intro",
      "Methods",
      "Results",
      "Close",
    ]);
    expect(planSectionCreation({ mode: "bulk", titles: "\n\n" })).toEqual([]);
  });

  it("placeholder mode creates a numbered run", () => {
    expect(planSectionCreation({ mode: "placeholder", count: 3 })).toEqual([
      "Placeholder 1",
      "Placeholder 2",
      "Placeholder 3",
    ]);
    expect(planSectionCreation({ mode: "placeholder", count: 0 })).toEqual([]);
    expect(planSectionCreation({ mode: "placeholder", count: -2 })).toEqual([]);
    expect(planSectionCreation({ mode: "placeholder", count: 2.5 })).toEqual([]);
    expect(planSectionCreation({ mode: "placeholder" })).toEqual([]);
  });
});

describe("section dialog", () => {
  it("shows only the fields for the chosen mode", () => {
    const host = mount();
    renderSectionDialog(host, { createSections: async () => {} });
    const modeSelect = host.querySelector<HTMLSelectElement>(".section-mode")!;
    const title = host.querySelector<HTMLInputElement>(".section-title")!;
    const titles = host.querySelector<HTMLTextAreaElement>(".section-titles")!;
    const count = host.querySelector<HTMLInputElement>(".section-count")!;

    expect([title.hidden, titles.hidden, count.hidden]).toEqual([false, true, true]);
    modeSelect.value = "bulk";
    modeSelect.dispatchEvent(new Event("change"));
    expect([title.hidden, titles.hidden, count.hidden]).toEqual([true, false, true]);
    modeSelect.value = "placeholder";
    modeSelect.dispatchEvent(new Event("change"));
    expect([title.hidden, titles.hidden, count.hidden]).toEqual([true, true, false]);
  });

  it("submits the planned titles for each mode", async () => {
    const host = mount();
    const created: string[][] = [];
    const dialog = renderSectionDialog(host, {
      createSections: async (titles) => {
        created.push(titles);
      },
    });
    const modeSelect = host.querySelector<HTMLSelectElement>(".section-mode")!;

    host.querySelector<HTMLInputElement>(".section-title")!.value = "Opening";
    await dialog.submit();

    modeSelect.value = "bulk";
    modeSelect.dispatchEvent(new Event("change"));
    host.querySelector<HTMLTextAreaElement>(".section-titles")!.value = "One\nTwo";
    await dialog.submit();

    modeSelect.value = "placeholder";
    modeSelect.dispatchEvent(new Event("change"));
    host.querySelector<HTMLInputElement>(".section-count")!.value = "2";
    await dialog.submit();

    expect(created).toEqual([
      ["Opening"],
      ["One", "Two"],
      ["Placeholder 1", "Placeholder 2"],
    ]);
  });

  it("does nothing when the plan is empty", async () => {
    const host = mount();
    const created: string[][] = [];
    const dialog = renderSectionDialog(host, {
      createSections: async (titles) => {
        created.push(titles);
      },
    });
    host.querySelector<HTMLInputElement>(".section-title")!.value = "   ";
    await dialog.submit();
    expect(created).toEqual([]);
  });

  it("routes creation failures to onError", async () => {
    const host = mount();
    const errors: string[] = [];
    const dialog = renderSectionDialog(host, {
      createSections: async () => {
        throw new Error("revision conflict");
      },
      onError: (message) => errors.push(message),
    });
    host.querySelector<HTMLInputElement>(".section-title")!.value = "Opening";
    await dialog.submit();
    expect(errors).toEqual(["revision conflict"]);
  });
});
