/**
 * Console entry point: wires the controller to the four views and keeps
 * the selection state mirrored into the URL query string as a deep link.
 *
 * The service base URL comes from the `api` query parameter (defaults to
 * same origin, which works when the bundle server also hosts these
 * assets via its --static flag).
 */

import { HttpApi } from "./api.js";
import { ConsoleController } from "./controller.js";
import { el } from "./dom.js";
import { CemView } from "./views/cem.js";
import { CieView } from "./views/cie.js";
import { GneView } from "./views/gne.js";
import { NieView } from "./views/nie.js";

function banner(message: string): void {
  const bar = el("div", { class: "banner" }, message);
  const retry = el("button", { class: "tool" }, "Retry");
  retry.addEventListener("click", () => window.location.reload());
  bar.appendChild(retry);
  document.body.prepend(bar);
}

async function boot(): Promise<void> {
  const query = new URLSearchParams(window.location.search);
  const baseUrl = query.get("api") ?? "";
  const api = new HttpApi(baseUrl, () => banner("The served bundle changed; reload to refresh."));
  const controller = new ConsoleController(api);

  const gne = new GneView(document.getElementById("gne")!, controller);
  const cem = new CemView(document.getElementById("cem")!, controller);
  const cie = new CieView(document.getElementById("cie")!, controller);
  const nie = new NieView(document.getElementById("nie")!, controller);

  const renderAll = () => {
    gne.render();
    cem.render();
    cie.render();
    nie.render();
    const link = controller.deepLink();
    const url = new URL(window.location.href);
    const preserved = url.searchParams.get("api");
    url.search = link;
    if (preserved) url.searchParams.set("api", preserved);
    window.history.replaceState(null, "", url.toString());
  };
  controller.onData(renderAll);
  controller.store.subscribe(renderAll);

  try {
    await controller.init();
    const deepLink = window.location.search.replace(/^\?/, "");
    if (deepLink) await controller.applyDeepLink(deepLink);
    renderAll();
  } catch (error) {
    banner(`Could not reach the analysis service: ${String(error)}`);
  }
}

void boot();
