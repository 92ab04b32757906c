import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api";
import { FakeService, sampleDocument } from "./fake-service";

describe("ApiClient", () => {
  it("hits the documented endpoints with JSON bodies", async () => {
    const service = new FakeService();
    const api = new ApiClient("http://svc", service.fetch);
    const cabinetId = await api.createCabinet(sampleDocument());
    const jobId = await api.optimize(cabinetId, { rngSeed: 5 });
    await api.getJob(jobId);
    await api.editComponent(cabinetId, 8, { widthMm: 200 });

    expect(service.requests.map((r) => `${r.method} ${r.path}`)).toEqual([
      "POST /cabinets",
      `POST /cabinets/${cabinetId}/optimize`,
      `GET /jobs/${jobId}`,
      `PUT /cabinets/${cabinetId}/components/8`,
    ]);
    expect(service.requests[1]!.body).toEqual({ rngSeed: 5 });
  });

  it("raises ApiError with the server detail", async () => {
    const service = new FakeService();
    const api = new ApiClient("http://svc", service.fetch);
    await expect(api.getJob("job-404")).rejects.toThrowError(ApiError);
    try {
      await api.getJob("job-404");
    } catch (err) {
      expect((err as ApiError).status).toBe(404);
      expect((err as ApiError).detail).toContain("job-404");
    }
  });

  it("rejects invalid cabinet documents with the 400 detail", async () => {
    const service = new FakeService();
    const api = new ApiClient("http://svc", service.fetch);
    const empty = { ...sampleDocument(), components: [] };
    await expect(api.createCabinet(empty)).rejects.toThrow(/components missing/);
  });
});
