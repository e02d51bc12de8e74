/**
 * Non-blocking notification banners.
 *
 * API failures never block the UI: they stack up in a corner container,
 * can be dismissed, and expire on their own. Callers keep working with
 * whatever state they already have.
 */

export type BannerKind = "error" | "info";

const CONTAINER_ID = "banner-container";

function bannerContainer(root: Document = document): HTMLElement {
  let container = root.getElementById(CONTAINER_ID);
  if (!container) {
    container = root.createElement("div");
    container.id = CONTAINER_ID;
    container.className = "banner-container";
    root.body.appendChild(container);
  }
  return container;
}

export interface BannerOptions {
  kind?: BannerKind;
  /** Autodismiss delay in milliseconds; 0 keeps the banner until closed. */
  timeoutMs?: number;
  root?: Document;
}

export function showBanner(message: string, options: BannerOptions = {}): HTMLElement {
  const root = options.root ?? document;
  const kind = options.kind ?? "error";
  const banner = root.createElement("div");
  banner.className = `banner banner-${kind}`;
  banner.setAttribute("role", "status");

  const text = root.createElement("span");
  text.className = "banner-message";
  text.textContent = message;
  banner.appendChild(text);

  const close = root.createElement("button");
  close.className = "banner-close";
  close.textContent = "×";
  close.addEventListener("click", () => banner.remove());
  banner.appendChild(close);

  bannerContainer(root).appendChild(banner);

  const timeoutMs = options.timeoutMs ?? 6000;
  if (timeoutMs > 0) {
    setTimeout(() => banner.remove(), timeoutMs);
  }
  return banner;
}
