/**
 * Browser entry point: connect to an authoring service, pick or create a
 * presentation, and hand the rest to AuthoringApp.
 */

import { DeckApi } from "./api.js";
import { AuthoringApp } from "./app.js";
import { showBanner } from "./banner.js";

const DEFAULT_BASE_URL = "http://127.0.0.1:8321";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

async function boot(): Promise<void> {
  const host = document.getElementById("app");
  if (!host) {
    return;
  }

  const picker = el("div", "deck-picker");
  const urlInput = el("input", "picker-url");
  urlInput.value = DEFAULT_BASE_URL;
  picker.appendChild(urlInput);

  const list = el("div", "picker-list");
  const refreshButton = el("button", "picker-refresh", "Connect");
  picker.appendChild(refreshButton);

  const createButton = el("button", "picker-create", "New presentation");
  picker.appendChild(createButton);
  picker.appendChild(list);
  host.appendChild(picker);

  const stage = el("div", "stage");
  host.appendChild(stage);

  const openDeck = async (api: DeckApi, id: string): Promise<void> => {
    const app = new AuthoringApp(stage, api);
    await app.open(id);
  };

  const loadList = async (): Promise<void> => {
    const api = new DeckApi(urlInput.value);
    try {
      const listing = await api.listPresentations();
      list.replaceChildren();
      for (const item of listing.presentations) {
        const button = el("button", "picker-deck", `${item.title}`);
        button.addEventListener("click", () => {
          void openDeck(api, item.id).catch((err: unknown) => {
            showBanner(err instanceof Error ? err.message : "failed to open deck");
          });
        });
        list.appendChild(button);
      }
      if (listing.presentations.length === 0) {
        list.appendChild(el("p", "picker-empty", "No presentations yet."));
      }
    } catch (err) {
      showBanner(err instanceof Error ? err.message : "cannot reach the service");
    }
  };

  refreshButton.addEventListener("click", () => {
    void loadList();
  });

  createButton.addEventListener("click", () => {
    const api = new DeckApi(urlInput.value);
    const title = window.prompt("Presentation title", "Untitled talk");
    if (title === null) {
      return;
    }
    const totalRaw = window.prompt("Total duration in seconds", "600");
    const total = Number.parseInt(totalRaw ?? "", 10);
    const audience = window.prompt(
      "Audience description",
      "general public interested in the topic",
    );
    if (!Number.isFinite(total) || audience === null) {
      return;
    }
    void api
      .createPresentation({
        title,
        total_duration_s: total,
        audience: { description: audience, expertise_level: 3 },
      })
      .then((body) => openDeck(api, body.presentation.id))
      .then(() => loadList())
      .catch((err: unknown) => {
        showBanner(err instanceof Error ? err.message : "create failed");
      });
  });

  await loadList().catch(() => {
    // The connect button retries; an unreachable service is not fatal here.
  });
}

void boot();
